use std::sync::Arc;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    build_tr, check_detect, phase_value, projector, projector_product, realize, root_of_unity, Check, DenseOperator,
    SuiteReport, Tolerances,
};
use crate::error::{Error, Result};
use crate::finite_field::{FieldCtx, FieldElement};
use crate::gf_linalg::span_size;
use crate::pauli_algebra::PauliOperator;
use crate::stabilizer_core::{Character, DetectClass, StabilizerGroup};
use crate::symplectic_code::{min_weight_coset, Distance};

/// Largest dimension accepted by [`identity_suite`].
pub const SUITE_LIMIT: u64 = 64;

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

/// Compares the symbolic group rules against dense matrices on `trials`
/// random operator pairs. Every check passes when its maximum entrywise
/// error stays below `tol`.
pub fn identity_suite(field: Arc<FieldCtx>, n: usize, seed: u64, trials: usize, tol: f64) -> Result<SuiteReport> {
    let p = field.p();
    let dim = (p as u128).pow((n * field.m() as usize) as u32);
    if dim > SUITE_LIMIT as u128 {
        return Err(Error::DimensionBudget {
            dim,
            budget: SUITE_LIMIT,
        });
    }
    let dim = dim as usize;
    let (t, r) = build_tr(p)?;
    let id_p = DenseOperator::identity(p as usize);
    let xi = root_of_unity(p, 1);
    let mut report = SuiteReport::default();

    report.push(Check::below("T^p=I", t.pow(p as u64).max_abs_diff(&id_p), tol));
    report.push(Check::below("R^p=I", r.pow(p as u64).max_abs_diff(&id_p), tol));
    report.push(Check::below(
        "TR=xiRT",
        t.matmul(&r).max_abs_diff(&r.matmul(&t).scale(xi)),
        tol,
    ));
    let adj = max_of((0..p as u64).flat_map(|i| {
        let (ti, ri) = (t.pow(i), r.pow(i));
        [
            ti.adjoint().max_abs_diff(&ti.pow(p as u64 - 1)),
            ri.adjoint().max_abs_diff(&ri.pow(p as u64 - 1)),
        ]
    }));
    report.push(Check::below("adjoint_is_power", adj, tol));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut unitary, mut product, mut comm, mut adjoint, mut power, mut tensor, mut orth) =
        (0f64, 0f64, 0f64, 0f64, 0f64, 0f64, 0f64);
    for _ in 0..trials {
        let x = PauliOperator::random(field.clone(), n, &mut rng);
        let y = PauliOperator::random(field.clone(), n, &mut rng);
        let (dx, dy) = (realize(&x)?, realize(&y)?);

        unitary = unitary.max(dx.unitarity_error());

        let dxy = dx.matmul(&dy);
        product = product.max(realize(&x.mul(&y)?)?.max_abs_diff(&dxy));

        let e = x.comm_exponent(&y)?;
        let dyx = dy.matmul(&dx).scale(xi.powu(e));
        comm = comm.max(dxy.max_abs_diff(&dyx));

        adjoint = adjoint.max(realize(&x.adjoint())?.max_abs_diff(&dx.adjoint()));

        power = power.max(realize(&x.pow(p as u64))?.max_abs_diff(&dx.pow(p as u64)));
        if p != 2 {
            power = power.max(dx.pow(p as u64).max_abs_diff(&DenseOperator::identity(dim)));
        }

        // (A⊗B)(C⊗D) = AC⊗BD with single-system A, C and the rest B, D.
        let (xa, xb) = split_first_system(&x);
        let (ya, yb) = split_first_system(&y);
        let lhs = realize(&xa)?
            .kron(&realize(&xb)?)
            .matmul(&realize(&ya)?.kron(&realize(&yb)?));
        let rhs = realize(&xa)?
            .matmul(&realize(&ya)?)
            .kron(&realize(&xb)?.matmul(&realize(&yb)?));
        tensor = tensor.max(lhs.max_abs_diff(&rhs));

        // Tr(X†Y) = dim·conj(φ_x)φ_y when the blocks agree, else 0.
        let y_same = x.clone().with_phase(y.phase());
        for other in [&y, &y_same] {
            let got = dx.adjoint().matmul(&realize(other)?).trace();
            let expected = if x.blocks() == other.blocks() {
                phase_value(p, x.phase()).conj() * phase_value(p, other.phase()) * dim as f64
            } else {
                Complex64::new(0.0, 0.0)
            };
            orth = orth.max((got - expected).norm());
        }
    }
    report.push(Check::below("unitarity", unitary, tol));
    report.push(Check::below("product_rule", product, tol));
    report.push(Check::below("commutation_rule", comm, tol));
    report.push(Check::below("adjoint_rule", adjoint, tol));
    report.push(Check::below("power_rule", power, tol));
    report.push(Check::below("tensor_rule", tensor, tol));
    report.push(Check::below("orthogonality", orth, tol));
    Ok(report)
}

/// First system with the operator's phase, and the remaining systems (or a
/// single identity system when `n = 1`).
fn split_first_system(x: &PauliOperator) -> (PauliOperator, PauliOperator) {
    let f = x.field().clone();
    let head = PauliOperator::new(f.clone(), x.phase(), x.a()[..1].to_vec(), x.b()[..1].to_vec()).unwrap();
    let tail = if x.n() > 1 {
        PauliOperator::new(f, 0, x.a()[1..].to_vec(), x.b()[1..].to_vec()).unwrap()
    } else {
        PauliOperator::identity(f, 1)
    };
    (head, tail)
}

/// `(T^i R^j)^p = I` for all `i, j` when `p` is odd; for `p = 2` the
/// dense `(TR)² = −I` and its exact symbolic counterpart `ι²`.
pub fn order_law(p: u32, tol: f64) -> Result<SuiteReport> {
    let (t, r) = build_tr(p)?;
    let d = p as usize;
    let id = DenseOperator::identity(d);
    let mut report = SuiteReport::default();
    if p == 2 {
        let y2 = t.matmul(&r).pow(2);
        report.push(Check::below(
            "(TR)^2=-I",
            y2.max_abs_diff(&id.scale(Complex64::new(-1.0, 0.0))),
            tol,
        ));
        let field = Arc::new(FieldCtx::new(2, 1, None)?);
        let sym = PauliOperator::from_values(field.clone(), &[1], &[1])?.pow(2);
        let expected = PauliOperator::identity(field, 1).with_phase(2);
        let mismatch = if sym == expected { 0.0 } else { 1.0 };
        report.push(Check::below("symbolic_(TR)^2=iota^2", mismatch, tol));
        let dense_of_sym = realize(&sym)?;
        report.push(Check::below(
            "symbolic_matches_dense",
            dense_of_sym.max_abs_diff(&y2),
            tol,
        ));
    } else {
        let err = max_of((0..p as u64).flat_map(|i| {
            let (t, r, id) = (&t, &r, &id);
            (0..p as u64).map(move |j| t.pow(i).matmul(&r.pow(j)).pow(p as u64).max_abs_diff(id))
        }));
        report.push(Check::below(format!("(T^iR^j)^{p}=I"), err, tol));
    }
    Ok(report)
}

/// Every error `E_{a,b}` (phase 0) with `1 ≤ weight ≤ max_weight`.
pub fn low_weight_errors(field: &Arc<FieldCtx>, n: usize, max_weight: usize) -> Vec<PauliOperator> {
    let q = field.q();
    let mut out = Vec::new();
    let mut support = Vec::new();
    fn rec(
        field: &Arc<FieldCtx>,
        n: usize,
        q: u32,
        start: usize,
        left: usize,
        support: &mut Vec<usize>,
        out: &mut Vec<PauliOperator>,
    ) {
        if !support.is_empty() {
            // All (a, b) ≠ (0, 0) on each supported position.
            let k = support.len();
            let per = (q * q - 1) as u64;
            for idx in 0..per.pow(k as u32) {
                let mut a = vec![FieldElement::ZERO; n];
                let mut b = vec![FieldElement::ZERO; n];
                let mut rest = idx;
                for &pos in support.iter() {
                    let v = (rest % per) as u32 + 1;
                    rest /= per;
                    a[pos] = FieldElement(v % q);
                    b[pos] = FieldElement(v / q);
                }
                out.push(PauliOperator::new(field.clone(), 0, a, b).unwrap());
            }
        }
        if left == 0 {
            return;
        }
        for pos in start..n {
            support.push(pos);
            rec(field, n, q, pos + 1, left - 1, support, out);
            support.pop();
        }
    }
    rec(field, n, q, 0, max_weight.min(n), &mut support, &mut out);
    out
}

/// Full dense verification of a stabilizer code for the character `mu`:
/// projector identities, character partition, the three detectability
/// cases for every error of weight below the distance (all `ξ^j` phases),
/// and the distance witness.
pub fn code_check(s: &StabilizerGroup, mu: &Character, tol: &Tolerances, budget: u64) -> Result<SuiteReport> {
    let field = s.field().clone();
    let p = field.p();
    let mn = s.n() * field.m() as usize;
    let proj = projector(s, mu)?;
    let dim = proj.dim();
    let mut report = SuiteReport::default();

    report.push(Check::below(
        "projector_hermitian",
        proj.max_abs_diff(&proj.adjoint()),
        tol.identity,
    ));
    report.push(Check::below(
        "projector_idempotent",
        proj.matmul(&proj).max_abs_diff(&proj),
        tol.identity,
    ));
    let expected_dim = (p as f64).powi((mn - s.rank()) as i32);
    report.push(Check::below(
        "projector_trace",
        (proj.trace() - expected_dim).norm(),
        tol.trace,
    ));
    report.push(Check::below(
        "projector_forms",
        proj.max_abs_diff(&projector_product(s, mu)?),
        tol.identity,
    ));

    let mut total = Complex64::new(0.0, 0.0);
    let mut sum = DenseOperator::zeros(dim);
    for nu in s.characters(budget)? {
        let pn = projector_product(s, &nu)?;
        total += pn.trace();
        sum = &sum + &pn;
    }
    report.push(Check::below(
        "character_partition",
        (total - (dim as f64)).norm(),
        tol.partition,
    ));
    report.push(Check::below(
        "character_resolution",
        sum.max_abs_diff(&DenseOperator::identity(dim)),
        tol.identity,
    ));

    // Case 1 on every element ξ^j Π g_i^{c_i} of S.
    span_size(p, s.rank() + 1, budget)?;
    let mut case1 = 0f64;
    let mut disagree = 0f64;
    let mut digits = vec![0u32; s.rank()];
    loop {
        let base = s.product(&digits);
        for j in 0..p {
            let e = base.clone().times_xi(j);
            let det = check_detect(&proj, &realize(&e)?, tol.proportional);
            match s.classify(&e, mu)? {
                DetectClass::InStabilizer { scalar } => {
                    let c = det.c.unwrap_or_default();
                    case1 = case1.max((c - phase_value(p, scalar)).norm());
                }
                _ => disagree = 1.0,
            }
        }
        if !bump(&mut digits, p) {
            break;
        }
    }
    report.push(Check::below("case1_scalar", case1, tol.scalar));

    let dist = min_weight_coset(s.source_code(), budget)?;
    let max_weight = match dist.distance {
        Distance::Finite(d) => d - 1,
        Distance::Infinite => s.n(),
    };
    let mut case2 = 0f64;
    let mut detect = 0f64;
    for base in low_weight_errors(&field, s.n(), max_weight) {
        for j in 0..p {
            let e = base.clone().times_xi(j);
            let de = realize(&e)?;
            let det = check_detect(&proj, &de, tol.proportional);
            detect = detect.max(det.residual);
            match s.classify(&e, mu)? {
                DetectClass::InStabilizer { scalar } => {
                    let c = det.c.unwrap_or_default();
                    case1 = case1.max((c - phase_value(p, scalar)).norm());
                }
                DetectClass::Anticommuting { .. } => {
                    case2 = case2.max(proj.matmul(&de).matmul(&proj).max_abs());
                }
                DetectClass::UndetectableLogical => disagree = 1.0,
            }
        }
    }
    report.push(Check::below("case2_zero", case2, tol.identity));
    report.push(Check::below(
        format!("detectable_below_distance(w<={max_weight})"),
        detect,
        tol.proportional,
    ));

    if let Some(w) = &dist.witness {
        let e = s.lift(w);
        let det = check_detect(&proj, &realize(&e)?, tol.proportional);
        if s.classify(&e, mu)? != DetectClass::UndetectableLogical {
            disagree = 1.0;
        }
        report.push(Check::above("witness_undetectable", det.residual, tol.undetectable));
    }
    report.push(Check::below("classification_agreement", disagree, 0.5));
    Ok(report)
}

fn bump(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}
