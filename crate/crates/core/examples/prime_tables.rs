//! The (2k,k) frames from primes p = 8m+5 and p = 8m+1.

use frameforge::generators::format_table;
use frameforge::{generate_thm511, generate_thm59};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", format_table(&generate_thm59(30)?, false));
    println!();
    print!("{}", format_table(&generate_thm511(20)?, true));
    Ok(())
}
