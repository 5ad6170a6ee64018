//! Verify a few signature and quasi-signature sets and print their frames.

use frameforge::{verify_quasi_signature_set, verify_signature_set, GroupTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("C4xC4", "(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)", false),
        ("C5", "1,4", true),
        ("C3xC3", "(1,0),(2,0),(0,1),(0,2)", true),
        ("C9", "1,2", false),
    ];
    for (desc, set, quasi) in cases {
        let g = GroupTable::from_descriptor(desc)?;
        let s = g.parse_subset(set)?;
        let verdict = if quasi { verify_quasi_signature_set(&g, &s) } else { verify_signature_set(&g, &s) };
        match verdict {
            Ok(v) => println!(
                "{desc:6} {{{set}}}: ({},{}) frame, mu = {}, c = {:.6}",
                v.params.n, v.params.k, v.witness_mu, v.params.c_value
            ),
            Err(why) => println!("{desc:6} {{{set}}}: rejected, {why}"),
        }
    }
    Ok(())
}
