//! Driving the command line interface in-process with JSON documents.

use good_semigroups::cli::{build, parse_document, run};

fn main() {
    let doc = r#"{"kind":"duplication","semigroup":[3,5],"ideal":[3]}"#;
    for args in [&["small"][..], &["mingens"], &["symmetric", "--format", "text"], &["member", "--point", "6,7"]] {
        let mut out = Vec::new();
        let argv = std::iter::once("goodsg").chain(args.iter().copied());
        let code = run(argv, &mut doc.as_bytes(), &mut out, &mut std::io::sink());
        print!("$ goodsg {} -> {code}\n{}", args.join(" "), String::from_utf8_lossy(&out));
    }

    // The library side of the same document.
    let built = build(&parse_document(doc).expect("valid document")).expect("buildable");
    println!("conductor {}", built.semigroup.conductor());
}
