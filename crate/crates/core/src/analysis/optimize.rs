use super::divergence::Profile;
use super::{DmKind, TargetDistribution};
use crate::codebook::CodebookSpec;
use crate::combinatorics::binomial_row;
use crate::{Error, Result};

/// Objective values below this relative distance count as ties.
const TIE_TOLERANCE: f64 = 1e-12;

/// One scanned value of the family parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub m: usize,
    pub input_len: usize,
    /// Divergence at the realized size `2^k`; the primary objective.
    pub objective: f64,
    /// Base-codebook divergence; breaks ties in `objective`.
    pub div_base: f64,
}

#[derive(Debug, Clone)]
pub struct Optimum {
    pub m_star: usize,
    pub spec: CodebookSpec,
    pub objective: f64,
    pub div_base: f64,
    /// Set when the `[0, m]` family was mirrored to `[n - m, n]` because the
    /// target favours ones.
    pub complemented: bool,
}

fn check_target(t: &TargetDistribution) -> Result<()> {
    if t.p1() <= 0.0 || t.p1() >= 1.0 {
        return Err(Error::InvalidProbability(t.p1()));
    }
    Ok(())
}

fn require_parameterized(kind: &DmKind) -> Result<()> {
    if !kind.is_parameterized() {
        return Err(Error::InvalidParameter(format!(
            "kind {kind} has no parameter to optimize"
        )));
    }
    Ok(())
}

/// Evaluates every legal `m` of a parameterized family.
///
/// For [`DmKind::UpToWeight`] with `p1 > 1/2` the scan runs on the
/// complemented target, i.e. `m` counts zeros instead of ones.
pub fn candidates(kind: &DmKind, n: usize, t: &TargetDistribution) -> Result<Vec<Candidate>> {
    require_parameterized(kind)?;
    check_target(t)?;
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let target = if mirrored(kind, t) { t.complement() } else { *t };
    let row = binomial_row(n);
    Ok(kind
        .m_values(n)
        .map(|m| {
            let weights = kind.weights_for(m);
            let profile = Profile::new(n, &weights, Some(&row), &target);
            Candidate {
                m,
                input_len: profile.input_len,
                objective: profile.divergence_at_input_len(n),
                div_base: profile.base_divergence(n),
            }
        })
        .collect())
}

fn mirrored(kind: &DmKind, t: &TargetDistribution) -> bool {
    *kind == DmKind::UpToWeight && t.p1() > 0.5
}

fn ties(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

/// Chooses `m*` for a parameterized family.
///
/// Minimizes the divergence at the realized size `2^k`; ties go to the
/// smaller base-codebook divergence and then to the smaller `m`.
pub fn optimize_m(kind: &DmKind, n: usize, t: &TargetDistribution) -> Result<Optimum> {
    let all = candidates(kind, n, t)?;
    let mut best = &all[0];
    for c in &all[1..] {
        let better = if ties(c.objective, best.objective) {
            !ties(c.div_base, best.div_base) && c.div_base < best.div_base
        } else {
            c.objective < best.objective
        };
        if better {
            best = c;
        }
    }
    let complemented = mirrored(kind, t);
    let spec = if complemented {
        CodebookSpec::weight_range(n, n - best.m, n)?
    } else {
        kind.build(n, best.m)?
    };
    debug_assert_eq!(spec.input_len(), best.input_len);
    Ok(Optimum {
        m_star: best.m,
        spec,
        objective: best.objective,
        div_base: best.div_base,
        complemented,
    })
}
