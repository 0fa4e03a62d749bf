//! Compares the three inner products. An F_q-linear code is
//! trace-selforthogonal exactly when it is selforthogonal for the
//! F_q-valued form; F_p-linear codes can separate the two.

use std::sync::Arc;

use nbstab::finite_field::FieldCtx;
use nbstab::symplectic_code::{search_selforthogonal, ClassicalCode, InnerProductKind, SearchOptions};

fn verdicts(name: &str, code: &ClassicalCode) {
    print!("{name:<28} fq-linear={:<5}", code.is_fq_linear());
    for kind in InnerProductKind::ALL {
        print!("  {kind}={}", code.is_selforthogonal(kind));
    }
    println!();
}

fn main() -> nbstab::Result<()> {
    let f4 = Arc::new(FieldCtx::new(2, 2, None)?);
    for seed in 0..6 {
        let code = search_selforthogonal(f4.clone(), 2, 2, 1, seed, &SearchOptions::default())?;
        verdicts(&format!("searched r=2 (seed {seed})"), &code);
    }
    let fq = ClassicalCode::fq_span(
        f4.clone(),
        2,
        search_selforthogonal(f4, 2, 1, 1, 0, &SearchOptions::default())?.basis(),
    )?;
    verdicts("F_4-span of seed 0", &fq);
    Ok(())
}
