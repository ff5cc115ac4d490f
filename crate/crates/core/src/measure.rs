//! Exact rule measures: support, confidence, lift, conviction.
//!
//! Measures are kept as exact rationals derived from integer counts; floating
//! point only appears at the text boundary, where values round to 3 decimals.

use std::cmp::Ordering;

use crate::context::{BinaryContext, Itemset};
use crate::error::{Error, Result};

/// Non-negative rational in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Panics if `den` is zero; reduce happens here so equality is structural.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        Ratio { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Ratio { num: 1, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Fixed three-decimal rendering, rounding half away from zero,
    /// computed in integers so output is platform-stable.
    pub fn format_3(&self) -> String {
        let n = self.num as u128;
        let d = self.den as u128;
        let scaled = (n * 1000 * 2 + d) / (2 * d);
        format!("{}.{:03}", scaled / 1000, scaled % 1000)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let left = self.num as u128 * other.den as u128;
        let right = other.num as u128 * self.den as u128;
        left.cmp(&right)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

/// A measure that can be a finite rational, `+infinity`, or undefined.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeasureValue {
    Undefined,
    Finite(Ratio),
    Infinite,
}

impl MeasureValue {
    /// Rendered as a 3-decimal number, `inf`, or `undef`.
    pub fn render(&self) -> String {
        match self {
            MeasureValue::Undefined => "undef".to_string(),
            MeasureValue::Finite(r) => r.format_3(),
            MeasureValue::Infinite => "inf".to_string(),
        }
    }
}

/// Total order with `undef` below every finite value and `inf` above.
impl PartialOrd for MeasureValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MeasureValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use MeasureValue::*;
        match (self, other) {
            (Undefined, Undefined) | (Infinite, Infinite) => Ordering::Equal,
            (Undefined, _) | (_, Infinite) => Ordering::Less,
            (_, Undefined) | (Infinite, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

/// The four interestingness measures of a rule, stored as the count
/// quadruple they derive from. Two rules with equal counts have equal
/// measures by construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RuleMeasures {
    object_count: u64,
    antecedent_support: u64,
    consequent_support: u64,
    rule_support: u64,
}

impl RuleMeasures {
    pub(crate) fn from_counts(
        object_count: u64,
        antecedent_support: u64,
        consequent_support: u64,
        rule_support: u64,
    ) -> Self {
        debug_assert!(rule_support <= antecedent_support);
        debug_assert!(rule_support <= consequent_support);
        debug_assert!(antecedent_support <= object_count);
        RuleMeasures {
            object_count,
            antecedent_support,
            consequent_support,
            rule_support,
        }
    }

    /// Absolute support of antecedent ∪ consequent.
    pub fn support_abs(&self) -> u64 {
        self.rule_support
    }

    /// Relative support; undefined on a context with no objects.
    pub fn support_rel(&self) -> MeasureValue {
        if self.object_count == 0 {
            MeasureValue::Undefined
        } else {
            MeasureValue::Finite(Ratio::new(self.rule_support, self.object_count))
        }
    }

    /// supp(A∪B)/supp(A); undefined when supp(A) = 0.
    pub fn confidence(&self) -> MeasureValue {
        if self.antecedent_support == 0 {
            MeasureValue::Undefined
        } else {
            MeasureValue::Finite(Ratio::new(self.rule_support, self.antecedent_support))
        }
    }

    /// True exactly when supp(A∪B) = supp(A) > 0.
    pub fn is_exact(&self) -> bool {
        self.antecedent_support > 0 && self.rule_support == self.antecedent_support
    }

    /// confidence / relative support of the consequent; undefined when
    /// supp(B) = 0 (or confidence is undefined).
    pub fn lift(&self) -> MeasureValue {
        if self.antecedent_support == 0 || self.consequent_support == 0 || self.object_count == 0 {
            return MeasureValue::Undefined;
        }
        // conf/(b/n) = (ab*n)/(a*b), reduced through two exact steps.
        let conf = Ratio::new(self.rule_support, self.antecedent_support);
        let rel_b = Ratio::new(self.consequent_support, self.object_count);
        MeasureValue::Finite(div(conf, rel_b))
    }

    /// (1 − relsupp(B)) / (1 − confidence); `+infinity` for an exact rule
    /// whose consequent is not universal, undefined when both are 1.
    pub fn conviction(&self) -> MeasureValue {
        if self.antecedent_support == 0 || self.object_count == 0 {
            return MeasureValue::Undefined;
        }
        let conf = Ratio::new(self.rule_support, self.antecedent_support);
        let rel_b = Ratio::new(self.consequent_support, self.object_count);
        if conf.is_one() {
            return if rel_b.is_one() {
                MeasureValue::Undefined
            } else {
                MeasureValue::Infinite
            };
        }
        // (1 - rel_b)/(1 - conf), both strictly positive here.
        let num = Ratio::new(rel_b.den - rel_b.num, rel_b.den);
        let den = Ratio::new(conf.den - conf.num, conf.den);
        MeasureValue::Finite(div(num, den))
    }

    /// `supp=4 [0.800]; conf=1.000; lift=1.250; conv=inf`
    pub fn render(&self) -> String {
        format!(
            "supp={} [{}]; conf={}; lift={}; conv={}",
            self.rule_support,
            self.support_rel().render(),
            self.confidence().render(),
            self.lift().render(),
            self.conviction().render()
        )
    }
}

fn div(a: Ratio, b: Ratio) -> Ratio {
    debug_assert!(b.num != 0);
    // Cross-reduce before multiplying to stay inside u64.
    let g1 = gcd(a.num, b.num);
    let g2 = gcd(a.den, b.den);
    Ratio::new((a.num / g1) * (b.den / g2), (a.den / g2) * (b.num / g1))
}

/// Measures of the rule A → B over `ctx`, from exact integer counts.
///
/// A and B must be non-empty and disjoint, and A must have non-zero support.
pub fn compute_measures(ctx: &BinaryContext, a: &Itemset, b: &Itemset) -> Result<RuleMeasures> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidRule(
            "antecedent and consequent must be non-empty".to_string(),
        ));
    }
    if a.intersects(b) {
        return Err(Error::OverlappingRule);
    }
    let supp_a = ctx.support(a)?;
    let supp_b = ctx.support(b)?;
    if supp_a == 0 {
        return Err(Error::UndefinedConfidence);
    }
    let supp_ab = ctx.support(&a.union(b))?;
    Ok(RuleMeasures::from_counts(
        ctx.object_count() as u64,
        supp_a,
        supp_b,
        supp_ab,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::testutil::{fixture_k, named};

    #[test]
    fn measures_c_to_a() {
        let k = fixture_k();
        let m = compute_measures(&k, &named(&k, "c"), &named(&k, "a")).unwrap();
        assert_eq!(m.support_abs(), 3);
        assert_eq!(m.support_rel(), MeasureValue::Finite(Ratio::new(3, 5)));
        assert_eq!(m.confidence(), MeasureValue::Finite(Ratio::new(3, 4)));
        assert_eq!(m.lift(), MeasureValue::Finite(Ratio::new(5, 4)));
        assert_eq!(m.conviction(), MeasureValue::Finite(Ratio::new(8, 5)));
        assert_eq!(
            m.render(),
            "supp=3 [0.600]; conf=0.750; lift=1.250; conv=1.600"
        );
    }

    #[test]
    fn exact_rule_has_infinite_conviction() {
        let k = fixture_k();
        let m = compute_measures(&k, &named(&k, "b"), &named(&k, "e")).unwrap();
        assert_eq!(m.support_abs(), 4);
        assert!(m.is_exact());
        assert_eq!(m.conviction(), MeasureValue::Infinite);
        assert_eq!(
            m.render(),
            "supp=4 [0.800]; conf=1.000; lift=1.250; conv=inf"
        );
    }

    #[test]
    fn lift_is_symmetric() {
        let k = fixture_k();
        for (x, y) in [("c", "a"), ("b", "e"), ("a b", "c e")] {
            let fwd = compute_measures(&k, &named(&k, x), &named(&k, y)).unwrap();
            let back = compute_measures(&k, &named(&k, y), &named(&k, x)).unwrap();
            assert_eq!(fwd.lift(), back.lift());
        }
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let k = fixture_k();
        assert_eq!(
            compute_measures(&k, &named(&k, "d e"), &named(&k, "a")),
            Err(Error::UndefinedConfidence)
        );
        assert_eq!(
            compute_measures(&k, &named(&k, "a b"), &named(&k, "b")),
            Err(Error::OverlappingRule)
        );
        assert!(compute_measures(&k, &Itemset::empty(), &named(&k, "a")).is_err());
    }

    #[test]
    fn conviction_undefined_for_universal_consequent() {
        // Two objects both holding y; x → y has confidence 1 and relsupp(y) = 1.
        let ctx = BinaryContext::new(
            vec!["x".into(), "y".into()],
            vec![vec![0, 1], vec![0, 1]],
        )
        .unwrap();
        let m = compute_measures(&ctx, &named(&ctx, "x"), &named(&ctx, "y")).unwrap();
        assert_eq!(m.conviction(), MeasureValue::Undefined);
    }

    #[test]
    fn measure_ordering_convention() {
        let fin = MeasureValue::Finite(Ratio::new(999, 1));
        assert!(MeasureValue::Infinite > fin);
        assert!(fin > MeasureValue::Undefined);
        assert!(MeasureValue::Finite(Ratio::new(1, 2)) < MeasureValue::Finite(Ratio::new(2, 3)));
    }

    #[test]
    fn three_decimal_rendering_rounds_half_up() {
        assert_eq!(Ratio::new(2, 3).format_3(), "0.667");
        assert_eq!(Ratio::new(1, 3).format_3(), "0.333");
        assert_eq!(Ratio::new(1, 2000).format_3(), "0.001");
        assert_eq!(Ratio::new(5, 4).format_3(), "1.250");
        assert_eq!(Ratio::new(0, 7).format_3(), "0.000");
    }
}
