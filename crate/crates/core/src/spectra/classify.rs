use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::equitable::{syndrome_equitable, vector_equitable, EquitableCounts};
use super::partition::{syndrome_partition, vector_partition, DistancePartition, Mode};
use super::profile::{syndrome_profile, vector_profile, DualSpectrum, OuterProfile};
use super::IntersectionArray;
use crate::codecore::{Code, SyndromeSpace, VectorSpace, WeightDistribution};
use crate::error::{Error, Result};
use crate::fieldkit::{binomial_int, krawtchouk_int, rational_rank, solve_rational, Rational};
use crate::guards::Guards;

/// Rationals `β_0..β_ρ` with `Σ β_i B_(x,i) = 1` for every `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingParameters {
    pub beta: Vec<Rational>,
    /// False when the system was underdetermined; `beta` is then the basic
    /// solution with every free variable set to zero.
    pub unique: bool,
}

impl PackingParameters {
    /// `κ_i = β_i (q-1)^i C(n, i)`.
    pub fn kappa(&self, n: usize, q: usize) -> Vec<Rational> {
        self.beta
            .iter()
            .enumerate()
            .map(|(i, b)| {
                b * Rational::from_integer(BigInt::from(q - 1).pow(i as u32) * binomial_int(n as i64, i as i64))
            })
            .collect()
    }
}

/// Parameters and regularity flags of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Whether every codeword sees the same distance distribution. When
    /// false the flags below are all false and no invariants are asserted.
    pub distance_invariant: bool,
    pub d: usize,
    pub e: usize,
    pub rho: usize,
    pub s: usize,
    pub b: usize,
    /// Rank over Q of the distinct rows of the outer distribution matrix.
    pub rank_b: usize,
    pub perfect: bool,
    pub quasi_perfect: bool,
    /// Only evaluated for binary codes of odd minimum distance.
    pub up_narrow: Option<bool>,
    pub up_gvt: bool,
    pub up_wide: bool,
    pub completely_regular: bool,
    pub t_regular_degree: Option<usize>,
}

/// Everything computed about one code.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub n: usize,
    pub q: usize,
    pub size: BigUint,
    pub partition: DistancePartition,
    pub profile: OuterProfile,
    pub equitable: EquitableCounts,
    /// Dual weight counts (linear codes in syndrome mode).
    pub dual: Option<DualSpectrum>,
    /// Weight distribution (linear codes).
    pub weight_distribution: Option<WeightDistribution>,
    /// `(1/|C|) Σ_i A_i P_k(n, i)` for `k = 0..=n`, `A` the distance
    /// distribution.
    pub dual_distance_distribution: Vec<Rational>,
    pub classification: Classification,
    pub intersection_array: Option<IntersectionArray>,
    pub packing: Option<PackingParameters>,
}

impl Analysis {
    pub fn mode(&self) -> Mode {
        self.partition.mode
    }
}

/// Analyse a code: syndrome mode for linear codes, vector mode otherwise.
pub fn analyze(code: &Code, guards: &Guards) -> Result<Analysis> {
    if code.is_linear() {
        analyze_syndrome_mode(code, guards)
    } else {
        analyze_vector_mode(code, guards)
    }
}

/// Syndrome-mode analysis of a linear code.
pub fn analyze_syndrome_mode(code: &Code, guards: &Guards) -> Result<Analysis> {
    let space = SyndromeSpace::new(code, guards)?;
    let partition = syndrome_partition(&space)?;
    let equitable = syndrome_equitable(&space, &partition)?;
    let (profile, dual) = syndrome_profile(code, &space, &partition, guards)?;
    let wd = WeightDistribution::from_u64(&dual.counts).macwilliams(code.q() as u32)?;
    let d = wd.nonzero_weights().first().copied().unwrap_or(code.n() + 1);
    let size = code.size();
    let dual_dist: Vec<Rational> = dual.counts.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect();
    let s = dual.external_distance();
    finish(code, size, partition, profile, equitable, Some(dual), Some(wd), dual_dist, d, s)
}

/// Vector-mode analysis: works for any code within the vector guards.
pub fn analyze_vector_mode(code: &Code, guards: &Guards) -> Result<Analysis> {
    let space = VectorSpace::new(code.field(), code.n(), guards)?;
    let explicit = if code.is_linear() { code.to_explicit(guards)? } else { code.clone() };
    let partition = vector_partition(&explicit, guards)?;
    let equitable = vector_equitable(&space, &partition)?;
    let profile = vector_profile(&explicit, &space, &partition, guards)?;
    let n = code.n();
    let size = code.size();
    // Distance distribution: average of the codeword rows.
    let m = BigInt::from(size.clone());
    let mut dist = alloc::vec![BigInt::zero(); n + 1];
    let mut d = n + 1;
    for row in profile.rows_with_label(0) {
        for (acc, x) in dist.iter_mut().zip(&row.b) {
            *acc += x * row.multiplicity;
        }
        if let Some(w) = row.b.iter().skip(1).position(|x| !x.is_zero()) {
            d = d.min(w + 1);
        }
    }
    let q = code.q() as u32;
    let dual_dist: Vec<Rational> = (0..=n as u32)
        .map(|k| {
            let mut acc = BigInt::zero();
            for (i, a) in dist.iter().enumerate() {
                if !a.is_zero() {
                    acc += a * krawtchouk_int(k, n as u32, i as u32, q);
                }
            }
            Rational::new(acc, &m * &m)
        })
        .collect();
    let s = dual_dist.iter().skip(1).filter(|x| !x.is_zero()).count();
    let wd = if code.is_linear() { Some(code.weight_distribution(guards)?) } else { None };
    finish(code, size, partition, profile, equitable, None, wd, dual_dist, d, s)
}

fn invariant(ok: bool, what: &str, c: &Classification) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "{what} fails (e={}, d={}, rho={}, s={}, b={}, rank={})",
            c.e, c.d, c.rho, c.s, c.b, c.rank_b
        )))
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    code: &Code,
    size: BigUint,
    partition: DistancePartition,
    profile: OuterProfile,
    equitable: EquitableCounts,
    dual: Option<DualSpectrum>,
    weight_distribution: Option<WeightDistribution>,
    dual_distance_distribution: Vec<Rational>,
    d: usize,
    s: usize,
) -> Result<Analysis> {
    let n = code.n();
    let q = code.q();
    let rho = partition.rho();
    let b = profile.b();
    let e = d.saturating_sub(1) / 2;
    let distance_invariant = profile.rows_with_label(0).count() == 1;

    let cr_rows = b == rho;
    let cr_equitable = equitable.is_equitable();
    if cr_rows != cr_equitable {
        return Err(Error::Inconsistent(format!(
            "outer-profile test says CR = {cr_rows}, equitable-partition test says {cr_equitable}"
        )));
    }

    let rows: Vec<Vec<Rational>> =
        profile.rows.iter().map(|r| r.b.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let rank_b = rational_rank(&rows);

    let truncated: Vec<Vec<Rational>> = rows.iter().map(|r| r[..=rho].to_vec()).collect();
    let ones = alloc::vec![Rational::one(); truncated.len()];
    let solved = solve_rational(&truncated, &ones);
    let packing = solved.solution.map(|beta| PackingParameters { beta, unique: solved.free_vars == 0 });

    let row_sum = |l: usize, idx: &[usize]| -> Vec<BigInt> {
        profile.rows_with_label(l).map(|r| idx.iter().map(|&i| r.b.get(i).cloned().unwrap_or_default()).sum()).collect()
    };
    let constant = |v: &[BigInt]| v.windows(2).all(|w| w[0] == w[1]);

    let mut c = Classification {
        distance_invariant,
        d,
        e,
        rho,
        s,
        b,
        rank_b,
        perfect: false,
        quasi_perfect: false,
        up_narrow: None,
        up_gvt: false,
        up_wide: false,
        completely_regular: false,
        t_regular_degree: profile.t_regularity_degree(),
    };
    let mut intersection_array = None;
    if distance_invariant {
        c.perfect = rho == e;
        c.quasi_perfect = rho == e + 1;
        c.completely_regular = cr_rows;
        c.up_wide = packing.is_some();
        if q == 2 && d % 2 == 1 {
            let narrow = if rho == e {
                constant(&row_sum(e, &[e, e + 1]))
            } else if rho == e + 1 {
                let mut sums = row_sum(e, &[e, e + 1]);
                sums.extend(row_sum(e + 1, &[e, e + 1]));
                constant(&sums)
            } else {
                false
            };
            c.up_narrow = Some(narrow);
        }
        c.up_gvt = rho == e + 1 && constant(&row_sum(e, &[e + 1])) && constant(&row_sum(e + 1, &[e + 1]));

        invariant(e <= rho && rho <= s && s <= b, "chain e <= rho <= s <= b", &c)?;
        invariant(rank_b == s + 1, "rank(B) = s + 1", &c)?;
        invariant(c.perfect == (e == s), "perfect iff e = s", &c)?;
        invariant(!c.completely_regular || rho == s, "CR implies rho = s", &c)?;
        invariant(c.up_wide == (rho == s), "UP in the wide sense iff rho = s", &c)?;
        invariant(c.up_gvt == (s == e + 1), "uniformly packed iff s = e + 1", &c)?;
        if let Some(p) = packing.as_ref().filter(|p| p.unique) {
            let total: Rational = p.kappa(n, q).iter().sum();
            let lhs = total * Rational::from_integer(BigInt::from(size.clone()));
            let rhs = Rational::from_integer(BigInt::from(q).pow(n as u32));
            invariant(lhs == rhs, "|C| sum kappa_i = q^n", &c)?;
        }
        if c.completely_regular {
            intersection_array = equitable.intersection_array(n, q);
        }
    }
    Ok(Analysis {
        n,
        q,
        size,
        partition,
        profile,
        equitable,
        dual,
        weight_distribution,
        dual_distance_distribution,
        classification: c,
        intersection_array,
        packing: if distance_invariant { packing } else { None },
    })
}
