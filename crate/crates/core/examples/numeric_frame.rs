//! Factor the (14,7) Paley matrix into explicit frame vectors and check
//! them numerically.

use frameforge::numeric::{frame_from_matrix, DEFAULT_TOL};
use frameforge::signature::quasi_signature_matrix;
use frameforge::{verify_frame, GroupTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = GroupTable::cyclic(13)?;
    let q = quasi_signature_matrix(&g, &g.parse_subset("1,3,4,9,10,12")?)?;
    let (frame, params) = frame_from_matrix(&q, DEFAULT_TOL)?;
    let report = verify_frame(&frame, &params, DEFAULT_TOL)?;
    println!("({},{}) frame, c = {:.9}", params.n, params.k, params.c_value);
    println!("tightness      {:.2e}", report.tightness_deviation);
    println!("uniformity     {:.2e}", report.uniformity_deviation);
    println!("equiangularity {:.2e}", report.equiangularity_deviation);
    println!("parseval       {:.2e}", report.parseval_deviation);
    println!("|<f_0, f_1>| = {:.9}", frame.inner(0, 1).norm());
    Ok(())
}
