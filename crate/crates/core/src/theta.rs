//! Genus-2 theta constants with characteristics, and the seed forms
//! `χ_5`, `χ_10`, `χ_{6,3}` and `χ_{6,8}` built from them.
//!
//! A characteristic `(m', m'')` has entries in `{0, 1/2}`; we store the
//! numerators as bits. With `x = n + m'` and `u = 2x_1`, `v = 2x_2` the
//! lattice term `e^{πi xᵗτx}` sits at the quarter-unit key `(u², v², 2uv)`
//! and carries the phase `e^{2πi x·m''} = i^{u m''_1 + v m''_2}` (bits).
//!
//! Each even constant has integral real coefficients and each odd gradient
//! is `i` times an integral series, because the terms at `±x` pair up. The
//! products are therefore formed over the integers after pulling out the
//! fractional monomial `Q1^{m'_1/4} Q2^{m'_2/4} R^{m'_1 m'_2 / 2}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fourier::slots::SlotSeries;
use crate::fourier::{Character, SiegelExpansion, VectorExpansion};
use crate::gaussian::Gaussian;
use crate::laurent::RPoly;
use crate::scalar::{isqrt, Scalar};

/// A theta characteristic; entries are the numerators of `m', m'' ∈ {0, 1/2}²`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaCharacteristic {
    pub m_prime: [u8; 2],
    pub m_double_prime: [u8; 2],
}

impl ThetaCharacteristic {
    pub fn new(m_prime: [u8; 2], m_double_prime: [u8; 2]) -> Self {
        ThetaCharacteristic {
            m_prime,
            m_double_prime,
        }
    }

    /// `4 m'·m'' mod 2`.
    pub fn parity(&self) -> u8 {
        (self.m_prime[0] * self.m_double_prime[0] + self.m_prime[1] * self.m_double_prime[1]) % 2
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    /// All sixteen characteristics, ordered lexicographically in `(m', m'')`.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(16);
        for bits in 0u8..16 {
            out.push(ThetaCharacteristic::new(
                [(bits >> 3) & 1, (bits >> 2) & 1],
                [(bits >> 1) & 1, bits & 1],
            ));
        }
        out
    }

    pub fn even() -> Vec<Self> {
        Self::all().into_iter().filter(|c| c.is_even()).collect()
    }

    pub fn odd() -> Vec<Self> {
        Self::all().into_iter().filter(|c| !c.is_even()).collect()
    }
}

/// Expansion in quarter units `e^{πiτ/4}` with Gaussian rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarterExpansion {
    series: SlotSeries<Gaussian<BigRational>>,
}

impl QuarterExpansion {
    /// Total-degree bound in quarter units.
    pub fn prec(&self) -> u32 {
        self.series.prec()
    }

    pub fn coeff(&self, a: u32, b: u32, c: i32) -> Gaussian<BigRational> {
        if a + b > self.prec() {
            return Gaussian::zero();
        }
        self.series.slot(a, b).coeff(c)
    }

    /// Nonzero terms sorted by key.
    pub fn terms(&self) -> Vec<(u32, u32, i32, Gaussian<BigRational>)> {
        let mut out: Vec<_> = self
            .series
            .nonzero_slots()
            .flat_map(|(a, b, p)| p.terms().iter().map(move |(c, v)| (a, b, *c, v.clone())))
            .collect();
        out.sort_by_key(|x| (x.0, x.1, x.2));
        out
    }
}

/// Lattice sum `Σ_x weight(u, v) · i^{u m''_1 + v m''_2} · key(u², v², 2uv)`
/// truncated at total Q-degree `n`.
fn lattice_sum(
    ch: ThetaCharacteristic,
    n: u32,
    weight: impl Fn(i64, i64) -> BigRational,
) -> QuarterExpansion {
    let qprec = 4 * n;
    // |x_i| <= √N + 1 covers every term with u² + v² <= 4N.
    let reach = 2 * (isqrt(n as u64) as i64 + 1) + 1;
    let mut terms: std::collections::BTreeMap<(u32, u32), Vec<(i32, Gaussian<BigRational>)>> =
        Default::default();
    for u in -reach..=reach {
        if (u - ch.m_prime[0] as i64).rem_euclid(2) != 0 {
            continue;
        }
        for v in -reach..=reach {
            if (v - ch.m_prime[1] as i64).rem_euclid(2) != 0 {
                continue;
            }
            let (a, b) = ((u * u) as u32, (v * v) as u32);
            if a + b > qprec {
                continue;
            }
            let w = weight(u, v);
            if w.is_zero() {
                continue;
            }
            let phase = Gaussian::<BigRational>::i_pow(
                u * ch.m_double_prime[0] as i64 + v * ch.m_double_prime[1] as i64,
            );
            terms
                .entry((a, b))
                .or_default()
                .push((2 * (u * v) as i32, phase.scale(&w)));
        }
    }
    let mut series = SlotSeries::zero(qprec);
    for ((a, b), t) in terms {
        series
            .set_slot(a, b, RPoly::from_terms(t))
            .expect("lattice keys are semidefinite");
    }
    QuarterExpansion { series }
}

/// `θ[m', m''](τ)` truncated at total Q-degree `n`.
pub fn even_theta_constant(ch: ThetaCharacteristic, n: u32) -> Result<QuarterExpansion> {
    if !ch.is_even() {
        return Err(Error::Characteristic(format!("{ch:?} is odd")));
    }
    Ok(lattice_sum(ch, n, |_, _| BigRational::one()))
}

/// The two `z`-gradient components of an odd theta series at `z = 0`, with
/// the factor `2πi` dropped: `Σ x_j e^{πi xᵗτx} e^{2πi x·m''}`.
pub fn odd_theta_gradient(ch: ThetaCharacteristic, n: u32) -> Result<[QuarterExpansion; 2]> {
    if ch.is_even() {
        return Err(Error::Characteristic(format!("{ch:?} is even")));
    }
    let half = |t: i64| BigRational::new(BigInt::from(t), BigInt::from(2));
    Ok([
        lattice_sum(ch, n, |u, _| half(u)),
        lattice_sum(ch, n, |_, v| half(v)),
    ])
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Part {
    Real,
    Imaginary,
}

/// Strips the fractional monomial of `ch` and returns the requested part as
/// an integral series in Q-units, truncated at shifted degree `prec`.
/// Fails if the other part is nonzero or a coefficient is not integral.
fn split_unit(
    q: &QuarterExpansion,
    ch: ThetaCharacteristic,
    part: Part,
    prec: u32,
) -> Result<SlotSeries<BigInt>> {
    let (m1, m2) = (ch.m_prime[0] as u32, ch.m_prime[1] as u32);
    let mut grouped: std::collections::BTreeMap<(u32, u32), Vec<(i32, BigInt)>> =
        Default::default();
    for (a, b, c, g) in q.terms() {
        let (keep, drop) = match part {
            Part::Real => (&g.re, &g.im),
            Part::Imaginary => (&g.im, &g.re),
        };
        if !drop.is_zero() {
            return Err(Error::Normalization(format!(
                "unexpected {} part at quarter key ({a},{b},{c})",
                if part == Part::Real { "imaginary" } else { "real" }
            )));
        }
        if !keep.is_integer() {
            return Err(Error::Normalization(format!(
                "non-integral coefficient at quarter key ({a},{b},{c})"
            )));
        }
        let cs = c - 2 * (m1 * m2) as i32;
        if (a - m1) % 4 != 0 || (b - m2) % 4 != 0 || cs % 4 != 0 {
            return Err(Error::Normalization(format!(
                "quarter key ({a},{b},{c}) does not match characteristic {ch:?}"
            )));
        }
        let (sa, sb) = ((a - m1) / 4, (b - m2) / 4);
        if sa + sb > prec {
            continue;
        }
        grouped
            .entry((sa, sb))
            .or_default()
            .push((cs / 4, keep.to_integer()));
    }
    let mut out = SlotSeries::zero(prec);
    for ((a, b), t) in grouped {
        out.set_slot_unchecked(a, b, RPoly::from_terms(t));
    }
    Ok(out)
}

/// Sum of the fractional monomials `(Σ m'_1, Σ m'_2, Σ 2 m'_1 m'_2)` in
/// quarter units, converted to Q-units.
fn shift_of(chars: &[ThetaCharacteristic]) -> Result<(u32, u32, i32)> {
    let (mut a, mut b, mut c) = (0u32, 0u32, 0u32);
    for ch in chars {
        a += ch.m_prime[0] as u32;
        b += ch.m_prime[1] as u32;
        c += 2 * (ch.m_prime[0] * ch.m_prime[1]) as u32;
    }
    if a % 4 != 0 || b % 4 != 0 || c % 4 != 0 {
        return Err(Error::Normalization(
            "product of theta factors is not in integral Q-units".into(),
        ));
    }
    Ok((a / 4, b / 4, (c / 4) as i32))
}

/// Undoes the monomial shift and checks the result lies in the semidefinite cone.
fn unshift(
    s: &SlotSeries<BigInt>,
    shift: (u32, u32, i32),
    prec: u32,
    character: Character,
) -> Result<SiegelExpansion<BigInt>> {
    let mut out = SiegelExpansion::zero(prec, character);
    for (a, b, p) in s.nonzero_slots() {
        let (ta, tb) = (a + shift.0, b + shift.1);
        if ta + tb > prec {
            continue;
        }
        out.set_slot(ta, tb, p.shift(shift.2))
            .map_err(|e| Error::Normalization(format!("theta product left the cone: {e}")))?;
    }
    Ok(out)
}

fn check_prec(n: u32) -> Result<()> {
    if n < 4 {
        return Err(Error::PrecisionFloor {
            have: n,
            need: 4,
            context: "theta seed forms".into(),
        });
    }
    Ok(())
}

/// The integer `λ` with `p = λ·target`, if any.
fn unit_multiple(p: &RPoly<BigInt>, target: &RPoly<BigInt>) -> Option<BigInt> {
    let (e, t) = target.terms().first()?;
    let (lambda, rem) = p.coeff(*e).div_rem(t);
    (rem.is_zero() && !lambda.is_zero() && target.scale(&lambda) == *p).then_some(lambda)
}

fn divide_all(f: &SiegelExpansion<BigInt>, lambda: &BigInt) -> Result<SiegelExpansion<BigInt>> {
    let mut out = SiegelExpansion::zero(f.prec(), f.character());
    for (a, b, p) in f.nonzero_slots() {
        let terms = p
            .terms()
            .iter()
            .map(|(c, v)| {
                v.exact_div(lambda).map(|q| (*c, q)).ok_or_else(|| {
                    Error::Normalization(format!("coefficient at ({a},{b},{c}) is not divisible"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        out.set_slot(a, b, RPoly::from_terms(terms))?;
    }
    Ok(out)
}

/// `χ_5`: the product of the ten even theta constants, scaled so that its
/// expansion starts with `(R⁻¹ − R) Q1 Q2`. Character ε, integral coefficients.
pub fn chi5(n: u32) -> Result<SiegelExpansion<BigInt>> {
    check_prec(n)?;
    let evens = ThetaCharacteristic::even();
    let shift = shift_of(&evens)?;
    let inner = n - shift.0 - shift.1;
    let mut acc = SlotSeries::<BigInt>::one(inner);
    for ch in &evens {
        let f = split_unit(&even_theta_constant(*ch, n)?, *ch, Part::Real, inner)?;
        acc = acc.mul_to(&f, inner);
    }
    let raw = unshift(&acc, shift, n, Character::Epsilon)?;
    let target = RPoly::from_terms(vec![(-1, BigInt::one()), (1, -BigInt::one())]);
    let lambda = unit_multiple(&raw.slot(1, 1), &target).ok_or_else(|| {
        Error::Normalization("leading Q1Q2 coefficient is not a multiple of R⁻¹ − R".into())
    })?;
    divide_all(&raw, &lambda)
}

/// `χ_10 = χ_5²`.
pub fn chi10(n: u32) -> Result<SiegelExpansion<BigInt>> {
    let f = chi5(n)?;
    Ok(f.mul(&f))
}

/// Leading `Q1 Q2` vector of `χ_{6,3}`.
fn chi63_leading() -> Vec<RPoly<BigInt>> {
    let p = |t: &[(i32, i64)]| {
        RPoly::from_terms(t.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect())
    };
    let z = RPoly::zero();
    vec![
        z.clone(),
        z.clone(),
        p(&[(-1, -1), (1, 1)]),
        p(&[(-1, 2), (1, 2)]),
        p(&[(-1, -1), (1, 1)]),
        z.clone(),
        z,
    ]
}

/// `χ_{6,3}`: the product of the six gradient linear forms `G_1 X + G_2 Y`
/// (entry `i` is the coefficient of `X^{6-i} Y^i`), scaled so that its
/// `Q1 Q2` vector is `(0, 0, R − R⁻¹, 2R + 2R⁻¹, R − R⁻¹, 0, 0)`.
pub fn chi63(n: u32) -> Result<VectorExpansion<BigInt>> {
    check_prec(n)?;
    let odds = ThetaCharacteristic::odd();
    let shift = shift_of(&odds)?;
    let inner = n - shift.0 - shift.1;
    let mut poly: Vec<SlotSeries<BigInt>> = vec![SlotSeries::one(inner)];
    for ch in &odds {
        let [g1, g2] = odd_theta_gradient(*ch, n)?;
        let g1 = split_unit(&g1, *ch, Part::Imaginary, inner)?;
        let g2 = split_unit(&g2, *ch, Part::Imaginary, inner)?;
        let mut next = vec![SlotSeries::zero(inner); poly.len() + 1];
        for (i, e) in poly.iter().enumerate() {
            next[i] = next[i].add(&e.mul_to(&g1, inner));
            next[i + 1] = next[i + 1].add(&e.mul_to(&g2, inner));
        }
        poly = next;
    }
    let raw = poly
        .iter()
        .map(|s| unshift(s, shift, n, Character::Epsilon))
        .collect::<Result<Vec<_>>>()?;
    let target = chi63_leading();
    let lambda = unit_multiple(&raw[3].slot(1, 1), &target[3])
        .filter(|l| {
            raw.iter()
                .zip(&target)
                .all(|(e, t)| e.slot(1, 1) == t.scale(l))
        })
        .ok_or_else(|| {
            Error::Normalization("leading Q1Q2 vector is not a multiple of the expected one".into())
        })?;
    let entries = raw
        .iter()
        .map(|e| divide_all(e, &lambda))
        .collect::<Result<Vec<_>>>()?;
    VectorExpansion::new(3, Character::Epsilon, entries)
}

/// `χ_{6,8} = χ_{6,3} · χ_5`.
pub fn chi68(n: u32) -> Result<VectorExpansion<BigInt>> {
    Ok(chi63(n)?.mul_scalar(&chi5(n)?, 5))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_even_and_six_odd_characteristics() {
        assert_eq!(ThetaCharacteristic::even().len(), 10);
        assert_eq!(ThetaCharacteristic::odd().len(), 6);
        let all = ThetaCharacteristic::all();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn even_constant_starts_with_one() {
        let t = even_theta_constant(ThetaCharacteristic::new([0, 0], [0, 0]), 4).unwrap();
        assert_eq!(t.coeff(0, 0, 0), Gaussian::one());
    }

    #[test]
    fn parity_is_enforced() {
        let odd = ThetaCharacteristic::new([1, 0], [1, 0]);
        assert!(even_theta_constant(odd, 4).is_err());
        assert!(odd_theta_gradient(ThetaCharacteristic::new([0, 0], [0, 0]), 4).is_err());
    }

    #[test]
    fn gradients_vanish_at_the_constant_term() {
        for ch in ThetaCharacteristic::odd() {
            for g in odd_theta_gradient(ch, 6).unwrap() {
                assert!(g.coeff(0, 0, 0).is_zero());
            }
        }
    }

    #[test]
    fn low_precision_is_rejected() {
        assert!(matches!(chi5(3), Err(Error::PrecisionFloor { .. })));
    }
}
