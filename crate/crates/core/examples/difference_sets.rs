//! Difference sets and the signature sets they induce.

use frameforge::{diffset_to_signature, verify_difference_set, GroupTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z11 = GroupTable::cyclic(11)?;
    let r = verify_difference_set(&z11, &z11.parse_subset("1,3,4,5,9")?)?;
    println!("Z11 quadratic residues: ({},{},{}), reversible = {}", r.n, r.k, r.lambda, r.reversible);

    let g = GroupTable::from_descriptor("C4xC4")?;
    let d = g.parse_subset("(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)")?;
    let r = verify_difference_set(&g, &d)?;
    println!("C4xC4 axes: ({},{},{}), Hadamard family = {}", r.n, r.k, r.lambda, r.hadamard_family);
    let v = diffset_to_signature(&g, &d)?;
    println!("  gives a ({},{}) signature set with mu = {}", v.params.n, v.params.k, v.witness_mu);
    Ok(())
}
