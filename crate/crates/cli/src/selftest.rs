//! Fast end-to-end invariant checks for an installed binary.

use std::sync::Arc;

use serde_json::json;

use gammawitt::kgroup::{
    davis_laurent, fundamental_theorem, polynomial_decomposition, positive_orthant_rays, render, wreath_orbit, Style,
};
use gammawitt::{
    AffineMonoid, ComplexOptions, FiniteAlgebra, GradedAlgebra, HochschildComplex, Integers, PrimeField, Rationals,
    Ring, TruncatedMonoid, WittVector,
};

use crate::io::Output;

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Small deterministic vectors on ℕ² with coordinates in {-1, 0, 1, 2}.
fn sample_vectors<R: Ring>(ring: &R, base: &Arc<TruncatedMonoid>, count: usize) -> Vec<WittVector<R>> {
    (0..count)
        .map(|k| {
            let coeffs = (0..base.len()).map(|i| ring.from_i64(((i * 7 + k * 13 + i * k) % 4) as i64 - 1)).collect();
            WittVector::from_coeffs(base.clone(), ring.clone(), coeffs).expect("shape")
        })
        .collect()
}

fn ghost_is_multiplicative() -> Result<(), String> {
    let base = Arc::new(TruncatedMonoid::new(AffineMonoid::orthant(2), None, vec![1, 1], 4).map_err(err)?);
    let vs = sample_vectors(&Integers, &base, 6);
    for x in &vs {
        for y in &vs {
            let (gx, gy) = (x.ghost(), y.ghost());
            ensure(x.add(y).map_err(err)?.ghost() == gx.add(&gy).map_err(err)?, "ghost of a sum")?;
            ensure(x.mul(y).map_err(err)?.ghost() == gx.mul(&gy).map_err(err)?, "ghost of a product")?;
        }
    }
    Ok(())
}

fn reduction_commutes() -> Result<(), String> {
    let base = Arc::new(TruncatedMonoid::naturals(8));
    let f3 = PrimeField::new(3).map_err(err)?;
    let vs = sample_vectors(&Integers, &base, 5);
    for x in &vs {
        for y in &vs {
            let reduce = |v: &WittVector<Integers>| gammawitt::witt::reduce_integers(v, f3);
            let lhs = reduce(&x.mul(y).map_err(err)?);
            ensure(lhs == reduce(x).mul(&reduce(y)).map_err(err)?, "reduction mod 3")?;
        }
    }
    Ok(())
}

fn frobenius_after_verschiebung() -> Result<(), String> {
    let base = Arc::new(TruncatedMonoid::naturals(12));
    for x in sample_vectors(&Integers, &base, 4) {
        for m in 2..=4 {
            let small = Arc::new(base.divided(m as u64).map_err(err)?);
            let lhs = x.verschiebung(m).and_then(|v| v.frobenius(m)).map_err(err)?;
            let rhs = x.scale_integer(m).and_then(|v| v.restrict(small)).map_err(err)?;
            ensure(lhs == rhs, "F_m V_m = m")?;
        }
    }
    Ok(())
}

fn hochschild_differentials() -> Result<(), String> {
    let base = TruncatedMonoid::naturals_mod(3).map_err(err)?;
    let alg = GradedAlgebra::monoid_algebra(FiniteAlgebra::ground(Rationals), &base);
    let cx = HochschildComplex::new(Arc::new(alg), ComplexOptions::new(3, true)).map_err(err)?;
    let f = Rationals;
    for n in 1..=3 {
        for eta in cx.degrees(n) {
            let bb = cx.b_matrix(n, &eta).compose(&f, &cx.b_matrix(n + 1, &eta));
            ensure(bb.is_zero(), "b² = 0")?;
            let cc = cx.connes_matrix(n, &eta).compose(&f, &cx.connes_matrix(n - 1, &eta));
            ensure(cc.is_zero(), "B² = 0")?;
        }
    }
    // HH_1 of Q[x]/(x³) in degree 1 is spanned by 1⊗x
    ensure(cx.hh_dim(1, &[1]).map_err(err)? == 1, "HH_1 in degree 1")
}

fn k_group_formulas() -> Result<(), String> {
    for n in 1..=5 {
        let poly = polynomial_decomposition(n).map_err(err)?;
        ensure(fundamental_theorem(n).and_then(|f| f.substitute_nk_powers()).map_err(err)? == poly, "substitution")?;
    }
    ensure(render(&davis_laurent(1).map_err(err)?, Style::Compact) == "K_q ⊕ K_{q−1} ⊕ 2·NK_q", "Laurent, one variable")
}

fn orbits_and_rays() -> Result<(), String> {
    for n in 0..=5 {
        for r in 0..=n {
            wreath_orbit(n, r).map_err(err)?;
        }
    }
    ensure(positive_orthant_rays(2, 3).len() == 7, "rays of ℕ₊² at height 3")
}

pub fn run() -> (Output, bool) {
    let checks: [(&str, Check); 6] = [
        ("ghost map is a ring homomorphism", ghost_is_multiplicative),
        ("reduction mod p commutes with Witt operations", reduction_commutes),
        ("Frobenius after Verschiebung", frobenius_after_verschiebung),
        ("Hochschild differentials", hochschild_differentials),
        ("K-group decompositions", k_group_formulas),
        ("orbits and rays", orbits_and_rays),
    ];
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, check) in checks {
        let result = check();
        ok &= result.is_ok();
        match &result {
            Ok(()) => lines.push(format!("PASS {name}")),
            Err(e) => lines.push(format!("FAIL {name}: {e}")),
        }
        rows.push(json!({ "check": name, "passed": result.is_ok(), "detail": result.err() }));
    }
    (Output::new(lines.join("\n"), json!({ "passed": ok, "checks": rows })), ok)
}
