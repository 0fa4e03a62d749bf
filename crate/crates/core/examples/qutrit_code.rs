//! A [[5,1,3]]_3 code, its characters and the classification of a few
//! errors into the three detectability cases.

use std::sync::Arc;

use nbstab::finite_field::FieldCtx;
use nbstab::gf_linalg::DEFAULT_BUDGET;
use nbstab::pauli_algebra::PauliOperator;
use nbstab::stabilizer_core::StabilizerGroup;
use nbstab::symplectic_code::{search_selforthogonal, SearchOptions};

fn main() -> nbstab::Result<()> {
    let f3 = Arc::new(FieldCtx::new(3, 1, None)?);
    let code = search_selforthogonal(f3.clone(), 5, 4, 3, 7, &SearchOptions::default())?;
    let s = StabilizerGroup::from_code(&code)?;
    let (params, _) = s.params(DEFAULT_BUDGET);
    println!("{params}, {} characters", s.character_count());

    let mu = s.characters(DEFAULT_BUDGET)?.nth(5).expect("81 characters");
    println!("character {:?}", mu.values);

    let mut errors = vec![
        PauliOperator::parse(f3.clone(), "E(1,0,0,0,0|0,0,0,0,0)")?,
        PauliOperator::parse(f3.clone(), "E(0,2,0,0,0|0,1,0,0,0)")?,
        s.generators()[0].mul(&s.generators()[1])?.times_xi(1),
    ];
    errors.extend(s.distance_witness()?);
    for e in &errors {
        println!("{e}  ->  {:?}", s.classify(e, &mu)?);
    }
    Ok(())
}
