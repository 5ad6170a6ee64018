//! The (9,6) cube-root frame from the quaternions, printed in the
//! Eisenstein cell notation.

use frameforge::cube::cube_seidel_matrix;
use frameforge::export::matrix_to_csv;
use frameforge::{unique_square_root, verify_quasi_signature_pair, CubePartition, GroupTable, Representation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = GroupTable::quaternion8();
    let (s, t) = (g.parse_subset("-1")?, g.parse_subset("i,j,k")?);
    let v = verify_quasi_signature_pair(&g, &s, &t)?;
    println!("Q8 S = {{-1}}, T = {{i,j,k}}: ({},{}) with mu = {}", v.params.n, v.params.k, v.witness_mu);

    let p = CubePartition::new(&g, &s, &t)?;
    print!("{}", matrix_to_csv(cube_seidel_matrix(&g, &p, true, Representation::Left)?.matrix()));

    let c9 = GroupTable::cyclic(9)?;
    let x = c9.element(4)?;
    println!("in C9 the square root of 4 is {}", c9.label(unique_square_root(&c9, x)?));
    Ok(())
}
