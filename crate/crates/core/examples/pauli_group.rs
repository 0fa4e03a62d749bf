//! The generalized Pauli group `ξ^k E_{a,b}`: products, commutation
//! exponents and the p = 2 phase subtlety.

use std::sync::Arc;

use nbstab::finite_field::FieldCtx;
use nbstab::pauli_algebra::PauliOperator;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nbstab::Result<()> {
    let f2 = Arc::new(FieldCtx::new(2, 1, None)?);
    let x = PauliOperator::from_values(f2.clone(), &[1], &[0])?;
    let z = PauliOperator::from_values(f2.clone(), &[0], &[1])?;
    let xz = x.mul(&z)?;
    println!("X = {x}\nZ = {z}\nXZ = {xz}\nZX = {}", z.mul(&x)?);
    println!("(XZ)^2 = {}  (order 4, so qubit phases live in <ι>)", xz.pow(2));

    let f3 = Arc::new(FieldCtx::new(3, 1, None)?);
    let a = PauliOperator::parse(f3.clone(), "E(1,2|0,1)")?;
    let b = PauliOperator::parse(f3.clone(), "ξ^1 E(2,0|1,0)")?;
    println!("\nover F_3:  A = {a},  B = {b}");
    println!("AB = {}", a.mul(&b)?);
    println!("BA = {}", b.mul(&a)?);
    println!("AB = ξ^{} BA", a.comm_exponent(&b)?);
    println!("A^3 = {},  A† = {}", a.pow(3), a.adjoint());

    let f4 = Arc::new(FieldCtx::new(2, 2, None)?);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let g = PauliOperator::random(f4, 3, &mut rng);
    println!("\nrandom element over F_4: {g}, weight {}", g.weight());
    Ok(())
}
