//! The family of quadrilaterals generated by `(δ, m, n, L)` with
//! `m² + n² = L²`, and its Heron subfamily `L | δ`.
//!
//! The triangle is `(α, β, γ) = (2δmn, δ(m² − n²), δ(m² + n²))`, so that
//! `√(α² + (β+γ)²) = 2δmL` is an integer and every length is rational.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{exact_sqrt, gcd, scaled_triple, LegForm, NumberError, PythTriple, Rational};
use crate::geometry::{construct_quad, QuadConstruction, Tangents};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Number(#[from] NumberError),
    #[error("L is not integral; ({m}, {n}) does not generate the family: {m}² + {n}² = {sum} is not a square")]
    NotSquare { m: u64, n: u64, sum: BigUint },
    #[error("form {form} gives m = {m} ≤ n = {n}; use the {other} form for (t₁, t₂) = ({t1}, {t2})")]
    WrongForm { t1: u64, t2: u64, form: GeneratorForm, other: GeneratorForm, m: u64, n: u64 },
    #[error("triples with the odd leg first lead to m² + n² = 2L², which is out of scope")]
    OutOfScope,
    #[error("parameter {0} does not fit in 64 bits")]
    Overflow(&'static str),
    #[error("multiplier j must be positive")]
    ZeroMultiplier,
    #[error("(m, n, L) = ({m}, {n}, {l}) does not satisfy m² + n² = L²")]
    BadHypotenuse { m: u64, n: u64, l: u64 },
}

/// How `(m, n, L)` is read off the primitive triple generated by `(t₁, t₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorForm {
    /// `m = t₁² − t₂²`, `n = 2t₁t₂`.
    DifferenceFirst,
    /// `m = 2t₁t₂`, `n = t₁² − t₂²`.
    ProductFirst,
}

impl GeneratorForm {
    pub fn other(self) -> Self {
        match self {
            GeneratorForm::DifferenceFirst => GeneratorForm::ProductFirst,
            GeneratorForm::ProductFirst => GeneratorForm::DifferenceFirst,
        }
    }
}

impl std::fmt::Display for GeneratorForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GeneratorForm::DifferenceFirst => "difference-first",
            GeneratorForm::ProductFirst => "product-first",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub t1: u64,
    pub t2: u64,
    pub form: GeneratorForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct F1Params {
    pub delta: u64,
    pub m: u64,
    pub n: u64,
    pub l: u64,
    pub generator: Option<Generator>,
}

impl F1Params {
    /// `k = 2δmL = √(α² + (β+γ)²)`.
    pub fn k(&self) -> BigUint {
        BigUint::from(2u32) * self.delta * self.m * self.l
    }
}

/// One quadrilateral of the family with its closed-form measurements.
#[derive(Clone, Debug, PartialEq)]
pub struct F1Member {
    pub params: F1Params,
    pub side_gamma_b: BigUint,
    pub side_b_gamma2: BigUint,
    pub side_gamma2_gamma1: BigUint,
    pub side_gamma_gamma1: Rational,
    pub diag_b_gamma1: BigUint,
    pub diag_gamma_gamma2: Rational,
    pub tangents: Tangents,
    pub area: Rational,
    pub is_heron: bool,
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

impl F1Member {
    pub fn triple(&self) -> PythTriple {
        let p = &self.params;
        scaled_triple(p.delta, p.m, p.n).expect("validated on construction")
    }

    pub fn construction(&self) -> QuadConstruction {
        let t = self.triple();
        construct_quad(&int(t.a), &int(t.b), &int(t.c)).expect("family triples are Pythagorean")
    }

    pub fn k(&self) -> BigUint {
        self.params.k()
    }

    /// `δ²mn[m² − n² + (m² − n²)²/(m² + n²) + 2m²]`, the three-triangle sum.
    pub fn area_bracket_form(&self) -> Rational {
        let p = &self.params;
        let (d, m, n) = (int(p.delta), int(p.m), int(p.n));
        let diff = &m * &m - &n * &n;
        let sum = &m * &m + &n * &n;
        &d * &d * &m * &n * (&diff + &diff * &diff / sum + int(2) * &m * &m)
    }

    /// The six lengths in the order |BΓ|, |ΓΓ₁|, |Γ₁Γ₂|, |Γ₂B|, |BΓ₁|, |ΓΓ₂|.
    pub fn table_lengths(&self) -> [Rational; 6] {
        [
            int(self.side_gamma_b.clone()),
            self.side_gamma_gamma1.clone(),
            int(self.side_gamma2_gamma1.clone()),
            int(self.side_b_gamma2.clone()),
            int(self.diag_b_gamma1.clone()),
            self.diag_gamma_gamma2.clone(),
        ]
    }

    pub fn lengths_and_area_integral(&self) -> bool {
        self.table_lengths().iter().all(Rational::is_integer) && self.area.is_integer()
    }
}

fn to_u64(v: u128, name: &'static str) -> Result<u64, FamilyError> {
    u64::try_from(v).map_err(|_| FamilyError::Overflow(name))
}

/// `(m, n, L)` from `(t₁, t₂)`; the result must satisfy `m > n`.
pub fn mnl_from_t(t1: u64, t2: u64, form: GeneratorForm) -> Result<(u64, u64, u64), FamilyError> {
    // same conditions as a Euclid generator
    scaled_triple(1u32, t1, t2)?;
    let (a, b) = (t1 as u128, t2 as u128);
    let diff = to_u64(a * a - b * b, "t₁² − t₂²")?;
    let prod = to_u64(2 * a * b, "2t₁t₂")?;
    let l = to_u64(a * a + b * b, "L")?;
    let (m, n) = match form {
        GeneratorForm::DifferenceFirst => (diff, prod),
        GeneratorForm::ProductFirst => (prod, diff),
    };
    if m <= n {
        return Err(FamilyError::WrongForm { t1, t2, form, other: form.other(), m, n });
    }
    Ok((m, n, l))
}

pub fn f1_member(delta: u64, m: u64, n: u64) -> Result<F1Member, FamilyError> {
    scaled_triple(delta, m, n)?;
    let sum = BigUint::from(m) * m + BigUint::from(n) * n;
    let l = exact_sqrt(&sum).ok_or_else(|| FamilyError::NotSquare { m, n, sum: sum.clone() })?;
    let l = l.to_u64().ok_or(FamilyError::Overflow("L"))?;
    Ok(build_member(F1Params { delta, m, n, l, generator: None }))
}

fn build_member(params: F1Params) -> F1Member {
    let F1Params { delta, m, n, l, .. } = params;
    let (d, m_, n_, l_) = (BigUint::from(delta), BigUint::from(m), BigUint::from(n), BigUint::from(l));
    let two = BigUint::from(2u32);
    let m2 = &m_ * &m_;
    let n2 = &n_ * &n_;
    let side = &two * &d * &m_ * &n_;
    let (dr, mr, nr, lr) = (int(d.clone()), int(m_.clone()), int(n_.clone()), int(l_.clone()));
    let diff = int(m2.clone()) - int(n2.clone());
    let tan_double = int(2) * &mr * &nr / &diff;
    let area = int(4) * &dr * &dr * mr.pow(5) * &nr / (&lr * &lr);
    F1Member {
        params,
        side_gamma_b: side.clone(),
        side_b_gamma2: side,
        side_gamma2_gamma1: &two * &d * &m_ * &l_,
        side_gamma_gamma1: int(2) * &dr * &mr * &diff / &lr,
        diag_b_gamma1: &two * &d * &m2,
        diag_gamma_gamma2: int(4) * &dr * &mr * &mr * &nr / &lr,
        tangents: Tangents {
            at_b: -tan_double.clone(),
            at_gamma: -(&mr / &nr),
            at_gamma1: tan_double,
            at_gamma2: &mr / &nr,
        },
        area,
        is_heron: (d % l_).is_zero(),
    }
}

/// Member with `δ = j·L`; always Heron.
pub fn heron_member(m: u64, n: u64, l: u64, j: u64) -> Result<F1Member, FamilyError> {
    if j == 0 {
        return Err(FamilyError::ZeroMultiplier);
    }
    if (m as u128).pow(2) + (n as u128).pow(2) != (l as u128).pow(2) {
        return Err(FamilyError::BadHypotenuse { m, n, l });
    }
    let delta = to_u64(j as u128 * l as u128, "δ")?;
    f1_member(delta, m, n)
}

/// Builds the member for a triple with the even leg first.
pub fn f1_member_from_triple(t: &PythTriple) -> Result<F1Member, FamilyError> {
    if t.leg_form == LegForm::OddLegFirst {
        return Err(FamilyError::OutOfScope);
    }
    let get = |v: &BigUint, name| v.to_u64().ok_or(FamilyError::Overflow(name));
    f1_member(get(&t.delta, "δ")?, get(&t.m, "m")?, get(&t.n, "n")?)
}

/// `tan θ = α/(β+γ) = n/m` and θ in degrees.
pub fn theta_of_member(mem: &F1Member) -> (Rational, f64) {
    let t = int(mem.params.n) / int(mem.params.m);
    let deg = t.to_f64().unwrap_or(f64::NAN).atan().to_degrees();
    (t, deg)
}

/// `(gcd(L, 2m(m² − n²)), gcd(L, 4nm²))`; both are 1 for every generator.
pub fn coprimality_certificate(m: u64, n: u64, l: u64) -> (BigUint, BigUint) {
    let (m, n, l) = (BigUint::from(m), BigUint::from(n), BigUint::from(l));
    let first = BigUint::from(2u32) * &m * (&m * &m - &n * &n);
    let second = BigUint::from(4u32) * &n * &m * &m;
    (gcd(&l, &first), gcd(&l, &second))
}

/// Generators `(t₁, t₂, form)` with `t₁ ≤ t_max`, in canonical order; the
/// form that yields `m ≤ n` is skipped.
pub fn generators(t_max: u64) -> impl Iterator<Item = (Generator, (u64, u64, u64))> {
    (2..=t_max).flat_map(|t1| {
        (1..t1).flat_map(move |t2| {
            [GeneratorForm::DifferenceFirst, GeneratorForm::ProductFirst]
                .into_iter()
                .filter_map(move |form| {
                    mnl_from_t(t1, t2, form)
                        .ok()
                        .map(|mnl| (Generator { t1, t2, form }, mnl))
                })
        })
    })
}

/// Every member with `t₁ ≤ t_max` and `δ ≤ delta_max` (only multiples of `L`
/// when `heron_only`), ordered by `(t₁, t₂, form, δ)`.
pub fn enumerate_f1(t_max: u64, delta_max: u64, heron_only: bool) -> impl Iterator<Item = F1Member> {
    generators(t_max).flat_map(move |(generator, (m, n, l))| {
        let step = if heron_only { l } else { 1 };
        (1..)
            .map(move |i| i * step)
            .take_while(move |&delta| delta <= delta_max)
            .map(move |delta| {
                build_member(F1Params { delta, m, n, l, generator: Some(generator) })
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use crate::geometry::{quad_area, Vertex, interior_tangent_from_coords};
    use num_traits::Pow;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn mnl_examples() {
        assert_eq!(mnl_from_t(2, 1, GeneratorForm::ProductFirst), Ok((4, 3, 5)));
        assert_eq!(mnl_from_t(3, 2, GeneratorForm::ProductFirst), Ok((12, 5, 13)));
        assert!(matches!(
            mnl_from_t(2, 1, GeneratorForm::DifferenceFirst),
            Err(FamilyError::WrongForm { m: 3, n: 4, .. })
        ));
        assert!(matches!(mnl_from_t(3, 1, GeneratorForm::ProductFirst), Err(FamilyError::Number(NumberError::SameParity { .. }))));
        assert!(matches!(mnl_from_t(1, 2, GeneratorForm::ProductFirst), Err(FamilyError::Number(NumberError::NotOrdered { .. }))));
        // (4, 1): m = 15 > n = 8 under the difference form
        assert_eq!(mnl_from_t(4, 1, GeneratorForm::DifferenceFirst), Ok((15, 8, 17)));
    }

    #[test]
    fn worked_member() {
        let mem = f1_member(5, 4, 3).unwrap();
        assert_eq!(
            (&mem.side_gamma_b, &mem.side_b_gamma2, &mem.side_gamma2_gamma1),
            (&big(120), &big(120), &big(200))
        );
        assert_eq!(mem.side_gamma_gamma1, rational(56, 1));
        assert_eq!(mem.diag_b_gamma1, big(160));
        assert_eq!(mem.diag_gamma_gamma2, rational(192, 1));
        assert_eq!(mem.tangents.at_b, rational(-24, 7));
        assert_eq!(mem.tangents.at_gamma1, rational(24, 7));
        // α/(β−γ) = 120/(35−125) and (β+γ)/α = 160/120
        assert_eq!(mem.tangents.at_gamma, rational(-4, 3));
        assert_eq!(mem.tangents.at_gamma2, rational(4, 3));
        assert!(mem.is_heron);
        assert_eq!(mem.area, rational(12288, 1));
        assert_eq!(mem.k(), big(200));
    }

    #[test]
    fn non_heron_member() {
        let mem = f1_member(1, 4, 3).unwrap();
        assert_eq!(mem.side_gamma_gamma1, rational(56, 5));
        assert_eq!(mem.diag_gamma_gamma2, rational(192, 5));
        assert!(!mem.is_heron);
        assert!(!mem.lengths_and_area_integral());
        assert!(matches!(f1_member(1, 3, 2), Err(FamilyError::NotSquare { .. })));
        assert!(matches!(f1_member(0, 4, 3), Err(FamilyError::Number(NumberError::ZeroScale))));
    }

    #[test]
    fn heron_subfamily() {
        let mem = heron_member(4, 3, 5, 1).unwrap();
        let expect: Vec<Rational> = [120, 56, 200, 120, 160, 192].iter().map(|&v| rational(v, 1)).collect();
        assert_eq!(mem.table_lengths().to_vec(), expect);
        assert_eq!(mem.area, rational(12288, 1));

        let mem = heron_member(12, 5, 13, 1).unwrap();
        let expect: Vec<Rational> = [1560, 2856, 4056, 1560, 3744, 2880].iter().map(|&v| rational(v, 1)).collect();
        assert_eq!(mem.table_lengths().to_vec(), expect);
        assert_eq!(mem.area, int(4u32 * 5 * 12u32.pow(5)));
        assert_eq!(mem.area, rational(4_976_640, 1));

        let doubled = heron_member(4, 3, 5, 2).unwrap();
        let base = heron_member(4, 3, 5, 1).unwrap();
        for (d, b) in doubled.table_lengths().iter().zip(base.table_lengths()) {
            assert_eq!(d, &(b * rational(2, 1)));
        }
        assert_eq!(doubled.area, rational(49152, 1));
        assert!(matches!(heron_member(4, 3, 6, 1), Err(FamilyError::BadHypotenuse { .. })));
        assert!(matches!(heron_member(4, 3, 5, 0), Err(FamilyError::ZeroMultiplier)));
    }

    #[test]
    fn heron_lengths_at_unit_multiplier() {
        // δ = L: (2Lmn, 2Lmn, 2mL², 2m(m²−n²); 2Lm², 4nm²), area 4nm⁵
        for (_, (m, n, l)) in generators(8) {
            let mem = heron_member(m, n, l, 1).unwrap();
            let (m_, n_, l_) = (big(m), big(n), big(l));
            assert_eq!(mem.side_gamma_b, big(2) * &l_ * &m_ * &n_);
            assert_eq!(mem.side_gamma2_gamma1, big(2) * &m_ * &l_ * &l_);
            assert_eq!(mem.side_gamma_gamma1, int(big(2) * &m_ * (&m_ * &m_ - &n_ * &n_)));
            assert_eq!(mem.diag_b_gamma1, big(2) * &l_ * &m_ * &m_);
            assert_eq!(mem.diag_gamma_gamma2, int(big(4) * &n_ * &m_ * &m_));
            assert_eq!(mem.area, int(big(4) * &n_ * Pow::pow(&m_, 5u32)));
        }
    }

    #[test]
    fn theta_examples() {
        let (t, deg) = theta_of_member(&f1_member(5, 4, 3).unwrap());
        assert_eq!(t, rational(3, 4));
        assert!((deg - 36.86989765).abs() < 1e-7);
        let (t, deg) = theta_of_member(&f1_member(13, 12, 5).unwrap());
        assert_eq!(t, rational(5, 12));
        assert!((deg - 22.61986495).abs() < 1e-7);
        assert_eq!(theta_of_member(&f1_member(10, 4, 3).unwrap()).0, rational(3, 4));
        assert_eq!(f1_member(5, 4, 3).unwrap().construction().tan_theta, rational(3, 4));
    }

    #[test]
    fn enumeration() {
        let one: Vec<_> = enumerate_f1(2, 5, true).collect();
        assert_eq!(one.len(), 1);
        assert_eq!((one[0].params.m, one[0].params.n, one[0].params.l, one[0].params.delta), (4, 3, 5, 5));

        let two: Vec<_> = enumerate_f1(3, 13, true).map(|m| (m.params.m, m.params.n, m.params.l, m.params.delta)).collect();
        assert_eq!(two, vec![(4, 3, 5, 5), (4, 3, 5, 10), (12, 5, 13, 13)]);
        let unit: Vec<_> = two.iter().filter(|k| k.3 == k.2).collect();
        assert_eq!(unit, vec![&(4, 3, 5, 5), &(12, 5, 13, 13)]);

        assert_eq!(enumerate_f1(2, 4, true).count(), 0);

        let all: Vec<_> = enumerate_f1(3, 4, false).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|m| !m.is_heron));
    }

    #[test]
    fn enumeration_is_unique_and_ordered() {
        let keys: Vec<_> = enumerate_f1(12, 30, false)
            .map(|m| {
                let g = m.params.generator.unwrap();
                (g.t1, g.t2, g.form, m.params.delta)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        // exactly one form per admissible (t₁, t₂)
        let mut pairs: Vec<_> = keys.iter().map(|k| (k.0, k.1)).collect();
        pairs.dedup();
        assert_eq!(pairs.len() * 30, keys.len());
    }

    #[test]
    fn coprimality_examples() {
        assert_eq!(coprimality_certificate(4, 3, 5), (big(1), big(1)));
        assert_eq!(coprimality_certificate(12, 5, 13), (big(1), big(1)));
        for (_, (m, n, l)) in generators(30) {
            assert_eq!(coprimality_certificate(m, n, l), (big(1), big(1)), "({m}, {n}, {l})");
        }
    }

    #[test]
    fn members_agree_with_construction() {
        for mem in enumerate_f1(6, 12, false) {
            let q = mem.construction();
            assert_eq!(quad_area(&q), mem.area);
            assert_eq!(mem.area, mem.area_bracket_form());
            assert_eq!(q.side_gamma_gamma1.as_rational(), Some(&mem.side_gamma_gamma1));
            assert_eq!(q.diag_gamma_gamma2.as_rational(), Some(&mem.diag_gamma_gamma2));
            assert_eq!(q.side_gamma2_gamma1.as_rational(), Some(&int(mem.side_gamma2_gamma1.clone())));
            for v in Vertex::ALL {
                assert_eq!(interior_tangent_from_coords(&q, v).finite(), Some(mem.tangents.get(v)));
            }
            // k² = 4δ²m²(n² + m²)
            let p = mem.params;
            let k = mem.k();
            assert_eq!(&k * &k, big(4) * big(p.delta).pow(2u32) * big(p.m).pow(2u32) * (big(p.n).pow(2u32) + big(p.m).pow(2u32)));
            let t = mem.triple();
            assert_eq!(exact_sqrt(&(&t.a * &t.a + (&t.b + &t.c).pow(2u32))), Some(k));
        }
    }

    #[test]
    fn odd_leg_first_is_out_of_scope() {
        let t = crate::exactnum::classify_triple(3u32, 4u32, 5u32).unwrap();
        assert_eq!(f1_member_from_triple(&t), Err(FamilyError::OutOfScope));
        let t = crate::exactnum::classify_triple(120u32, 35u32, 125u32).unwrap();
        assert_eq!(f1_member_from_triple(&t).unwrap(), f1_member(5, 4, 3).unwrap());
    }
}
