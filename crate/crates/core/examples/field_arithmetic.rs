//! Arithmetic in F_{p^m}: multiplication, inverses, the trace and the
//! coordinate map φ that turns the trace form into a dot product.
//!
//! ```text
//! cargo run --example field_arithmetic
//! ```

use nbstab::finite_field::{FieldCtx, FieldSpec};

fn main() -> nbstab::Result<()> {
    let f4 = FieldCtx::new(2, 2, None)?;
    println!("{f4}  (elements are integers holding base-p coefficient digits)");
    println!("Gram matrix tr(x^i x^j): {:?}", f4.gram().to_rows());

    println!("\n  a   a^-1  tr(a)  phi(a)");
    for a in f4.elements().skip(1) {
        println!("  {}   {}     {}      {}", a.0, f4.inv(a)?.0, f4.trace(a), f4.phi(a).0);
    }

    let f9: FieldCtx = "p=3,m=2,mod=1,0,1".parse::<FieldSpec>()?.build()?;
    let x = f9.basis_element(1);
    println!(
        "\n{f9}: x^2 = {}, x^4 = {}, tr(1) = {}",
        f9.mul(x, x).0,
        f9.pow(x, 4).0,
        f9.trace(f9.basis_element(0))
    );

    // The Gram form reproduces the trace of a product for every pair.
    let agree = f9
        .elements()
        .all(|a| f9.elements().all(|b| f9.gram_form(a, b) == f9.trace(f9.mul(a, b))));
    println!("coords(a)^T M coords(b) == tr(ab) for all a, b in F_9: {agree}");
    Ok(())
}
