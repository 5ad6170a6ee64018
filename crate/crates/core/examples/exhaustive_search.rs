//! Every signature set of C4xC4, and the cube-root pairs
//! of a small group.

use frameforge::{search, GroupTable, SearchSpec, SignatureKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = GroupTable::from_descriptor("C4xC4")?;
    let hits = search(&SearchSpec::new(g.clone(), SignatureKind::Signature))?;
    println!("C4xC4 has {} signature sets", hits.len());
    for hit in hits.iter().filter(|h| h.verdict.set.len() == 6).take(5) {
        println!("  ({},{}) {:?}", hit.verdict.params.n, hit.verdict.params.k, hit.canonical_key.s);
    }

    let q8 = GroupTable::quaternion8();
    for kind in [SignatureKind::CubePair, SignatureKind::CubeQuasi] {
        let hits = search(&SearchSpec::new(q8.clone(), kind))?;
        println!("Q8 {}: {} hits", kind.as_str(), hits.len());
    }
    Ok(())
}
