//! Search for a selforthogonal code, certify its distance and inspect the
//! resulting [[5,1,3]]_2 stabilizer code.

use std::sync::Arc;

use nbstab::finite_field::FieldCtx;
use nbstab::gf_linalg::DEFAULT_BUDGET;
use nbstab::stabilizer_core::StabilizerGroup;
use nbstab::symplectic_code::{format_code, search_selforthogonal, SearchOptions};

fn main() -> nbstab::Result<()> {
    let f2 = Arc::new(FieldCtx::new(2, 1, None)?);
    let code = search_selforthogonal(f2, 5, 4, 3, 1, &SearchOptions::default())?;
    print!("{}", format_code(&code));

    let s = StabilizerGroup::from_code(&code)?;
    let (params, report) = s.params(DEFAULT_BUDGET);
    let report = report?;
    println!("\n{params}");
    for g in s.generators() {
        println!("  {g}");
    }
    println!("visited {} dual vectors", report.enumerated);
    if let Some(w) = s.distance_witness()? {
        println!("undetectable weight-{} error: {w}", w.weight());
    }
    Ok(())
}
