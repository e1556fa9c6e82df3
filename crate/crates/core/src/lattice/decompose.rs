use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::flow::{check_kernel, simple_flow_on, FlowLattice, FlowVector, LatticeSource};
use crate::error::{Error, Result};
use crate::matroid::RegularMatroid;

/// Tutte's consistent decomposition of a flow into simple flows.
///
/// Every returned flow `α` has `supp(α) ⊆ supp(β)` and `α(e)β(e) ≥ 0`, and
/// the flows sum to `β`.
pub fn consistent_decompose(lat: &FlowLattice, beta: &FlowVector) -> Result<Vec<FlowVector>> {
    let Some(LatticeSource::Flows(m)) = lat.source() else {
        return Err(Error::Domain(
            "consistent decomposition needs a flow lattice built from a matroid".into(),
        ));
    };
    decompose_flow(m, beta)
}

/// As [`consistent_decompose`], against the matroid directly.
pub fn decompose_flow(m: &RegularMatroid, beta: &FlowVector) -> Result<Vec<FlowVector>> {
    check_kernel(m, beta)?;
    let mut rest = beta.clone();
    let mut parts = Vec::new();
    while !rest.is_zero() {
        let alpha = conforming_flow(m, &rest)?;
        rest = rest.sub(&alpha);
        parts.push(alpha);
    }
    Ok(parts)
}

/// A simple flow conforming to the nonzero flow `beta`.
///
/// Pick a circuit inside the support, orient its simple flow to agree with
/// `beta` at the coordinate of least `|beta(e)|`, and subtract `|beta(e)|`
/// copies; the support strictly shrinks. The flow that finally cancels the
/// remainder exactly conforms to every intermediate remainder, hence to `beta`.
fn conforming_flow(m: &RegularMatroid, beta: &FlowVector) -> Result<FlowVector> {
    let mut current = beta.clone();
    loop {
        let support = current.support();
        let circuit = m
            .first_circuit_within(support.indices())
            .expect("the support of a nonzero flow is dependent");
        let mut alpha = simple_flow_on(m, &circuit)?;
        let pivot = *circuit
            .indices()
            .iter()
            .min_by_key(|&&e| current.coords()[e].abs())
            .expect("circuits are nonempty");
        let b = current.coords()[pivot].clone();
        if (&alpha.coords()[pivot] * &b).is_negative() {
            alpha = alpha.neg();
        }
        let next = current.sub(&alpha.scaled(&b.abs()));
        if next.is_zero() {
            return Ok(alpha);
        }
        current = next;
    }
}

/// Checks the three defining conditions of a consistent decomposition
/// (sum, support containment, sign agreement), plus that every part is a
/// `{-1, 0, 1}` flow of `m` supported on a circuit.
pub fn check_consistent(m: &RegularMatroid, beta: &FlowVector, parts: &[FlowVector]) -> Result<()> {
    let fail = |msg: String| Err(Error::Domain(msg));
    let mut sum = FlowVector::zero(beta.len());
    let support = beta.support();
    for (k, a) in parts.iter().enumerate() {
        if a.len() != beta.len() || a.is_zero() || !a.is_ternary() {
            return fail(format!("part {k} is not a nonzero ternary vector"));
        }
        check_kernel(m, a)?;
        let sa = a.support();
        let r = m.rank_of(sa.indices());
        if r + 1 != sa.len() || m.first_circuit_within(sa.indices()).as_ref() != Some(&sa) {
            return fail(format!("support of part {k} is not a circuit"));
        }
        if !sa.is_subset(&support) {
            return fail(format!("part {k} leaves the support of the flow"));
        }
        if a.coords().iter().zip(beta.coords()).any(|(x, y)| (x * y).is_negative()) {
            return fail(format!("part {k} disagrees in sign with the flow"));
        }
        sum = sum.add(a);
    }
    if &sum != beta {
        return fail("parts do not sum to the flow".into());
    }
    let mass: BigInt = parts.iter().map(FlowVector::l1).sum();
    debug_assert!(mass == beta.l1() || parts.is_empty() && beta.l1().is_zero());
    Ok(())
}
