//! Parsing descriptors, including syntax errors with positions.

use csring::cli::{parse_descriptor, parse_descriptor_file};

fn main() {
    for text in ["zmod 6", "trivext(zmod 2, dsum(cyclic(zmod 2,[0]), cyclic(zmod 2,[0])))", "zmod", "dsum(regular(zmod 2),\n  bogus)"] {
        match parse_descriptor(text) {
            Ok(d) => println!("ok    {d}"),
            Err(e) => println!("error {e}"),
        }
    }
    let file = "# rings\nzmod 4\nproduct(zmod 2, zmod 3)\n\nregular(zmod 8)  # a module\n";
    for d in parse_descriptor_file(file).expect("valid file") {
        println!("file  {d}");
    }
}
