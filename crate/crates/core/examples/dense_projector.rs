//! Dense cross-check of a stabilizer code: builds the code projector as
//! an explicit matrix and runs the full verification report.

use std::sync::Arc;

use nbstab::dense_verifier::{code_check, projector, Tolerances};
use nbstab::finite_field::FieldCtx;
use nbstab::gf_linalg::DEFAULT_BUDGET;
use nbstab::stabilizer_core::StabilizerGroup;
use nbstab::symplectic_code::{search_selforthogonal, SearchOptions};

fn main() -> nbstab::Result<()> {
    let f4 = Arc::new(FieldCtx::new(2, 2, None)?);
    let code = search_selforthogonal(f4, 2, 2, 1, 3, &SearchOptions::default())?;
    let s = StabilizerGroup::from_code(&code)?;
    let mu = s.default_character();
    let p = projector(&s, &mu)?;
    println!(
        "{}: {}x{} projector, trace {:.6}",
        s.params(DEFAULT_BUDGET).0,
        p.dim(),
        p.dim(),
        p.trace().re
    );

    let report = code_check(&s, &mu, &Tolerances::default(), DEFAULT_BUDGET)?;
    print!("{report}");
    println!("{}", if report.passed() { "PASS" } else { "FAIL" });
    Ok(())
}
