//! Positive definite binary quadratic forms: reduction, class counting
//! (plain, 7-primitive, and unit-weighted), and the classical three-squares
//! correspondence sending a triple (x, y, z) to a form of discriminant
//! -4(x^2 + y^2 + z^2) through a cross-product preimage.
//!
//! A form (a, b, c) stands for a u^2 + b uv + c v^2 with discriminant
//! b^2 - 4ac. The reduced representative of a class satisfies
//! |b| <= a <= c with b >= 0 whenever |b| = a or a = c.

use std::fmt;

use crate::abacus::normalize_abacus;
use crate::error::{Error, Result};
use crate::families::{classify_sc6, sc6_to_triple};
use crate::partition::Partition;

/// Positive definite binary quadratic form (a, b, c).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadForm {
    /// Builds a form, requiring a > 0 and negative discriminant.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a <= 0 || b * b - 4 * a * c >= 0 {
            return Err(Error::NotPositiveDefinite { a, b, c });
        }
        Ok(QuadForm { a, b, c })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// The reduced representative of this form's proper equivalence class.
    ///
    /// Alternates translations b -> b - 2ka into (-a, a] with swaps
    /// (a, b, c) -> (c, -b, a) while a > c, then fixes the boundary sign.
    pub fn reduce(&self) -> QuadForm {
        let (mut a, mut b, mut c) = (self.a, self.b, self.c);
        loop {
            if b > a || b <= -a {
                // k with b - 2ak in (-a, a].
                let mut k = (b + a).div_euclid(2 * a);
                if b - 2 * a * k == -a {
                    k -= 1;
                }
                c = a * k * k - b * k + c;
                b -= 2 * a * k;
            }
            if a > c {
                (a, b, c) = (c, -b, a);
            } else {
                break;
            }
        }
        if b < 0 && (b == -a || a == c) {
            b = -b;
        }
        let reduced = QuadForm { a, b, c };
        debug_assert!(reduced.is_reduced());
        debug_assert_eq!(reduced.discriminant(), self.discriminant());
        reduced
    }

    /// Reduced representative of the inverse class (b negated).
    pub fn inverse(&self) -> QuadForm {
        QuadForm {
            a: self.a,
            b: -self.b,
            c: self.c,
        }
        .reduce()
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    if d >= 0 || !(d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1) {
        return Err(Error::InvalidDiscriminant(d));
    }
    Ok(())
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as i64;
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    while x * x > n {
        x -= 1;
    }
    x
}

/// All reduced forms of discriminant d, sorted by (a, b, c).
pub fn reduced_forms(d: i64) -> Result<Vec<QuadForm>> {
    check_discriminant(d)?;
    let mut out = Vec::new();
    let a_max = isqrt(-d / 3);
    for a in 1..=a_max {
        // b has the parity of d and lies in (-a, a].
        let mut b = -a + 1;
        if (b - d).rem_euclid(2) != 0 {
            b += 1;
        }
        while b <= a {
            let num = b * b - d;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a && !(b < 0 && a == c) {
                    out.push(QuadForm { a, b, c });
                }
            }
            b += 2;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of reduced forms of discriminant d, imprimitive forms included.
pub fn class_count(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?.len() as u64)
}

/// Number of reduced forms of discriminant d whose content gcd(a, b, c) is
/// not divisible by 7.
pub fn class_count_7primitive(d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?
        .iter()
        .filter(|f| gcd(gcd(f.a, f.b.abs()), f.c) % 7 != 0)
        .count() as u64)
}

/// Class count with the classical unit weights: forms a(u^2 + v^2) count
/// 1/2 and forms a(u^2 + uv + v^2) count 1/3. Returned as a reduced
/// fraction (numerator, denominator).
pub fn class_count_weighted(d: i64) -> Result<(u64, u64)> {
    let mut sixths = 0u64;
    for f in reduced_forms(d)? {
        sixths += if f.a == f.b && f.b == f.c {
            2
        } else if f.b == 0 && f.a == f.c {
            3
        } else {
            6
        };
    }
    let g = gcd(sixths as i64, 6) as u64;
    Ok((sixths / g, 6 / g))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Integer vectors m, n with cross product m x n equal to a given triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussLift {
    pub m: [i64; 3],
    pub n: [i64; 3],
}

impl GaussLift {
    pub fn cross(&self) -> [i64; 3] {
        let (m, n) = (self.m, self.n);
        [
            m[1] * n[2] - m[2] * n[1],
            m[2] * n[0] - m[0] * n[2],
            m[0] * n[1] - m[1] * n[0],
        ]
    }
}

/// Values 0, 1, -1, 2, -2, ..., bound, -bound.
fn balanced(bound: i64) -> impl Iterator<Item = i64> {
    (0..=2 * bound).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

fn lift_scan(x: i64, y: i64, z: i64, bound: i64) -> Option<GaussLift> {
    for m0 in balanced(bound) {
        for m1 in balanced(bound) {
            for m2 in balanced(bound) {
                if (m0, m1, m2) == (0, 0, 0) || m0 * x + m1 * y + m2 * z != 0 {
                    continue;
                }
                if let Some(n) = solve_second_factor([m0, m1, m2], [x, y, z], bound) {
                    return Some(GaussLift { m: [m0, m1, m2], n });
                }
            }
        }
    }
    None
}

/// First n in scan order with m x n = v, given m . v = 0 and m != 0.
fn solve_second_factor(m: [i64; 3], v: [i64; 3], bound: i64) -> Option<[i64; 3]> {
    let [m0, m1, m2] = m;
    let [x, y, z] = v;
    if m0 != 0 {
        // n1 and n2 are determined by n0.
        for n0 in balanced(bound) {
            let p = z + m1 * n0;
            let q = m2 * n0 - y;
            if p % m0 == 0 && q % m0 == 0 {
                let (n1, n2) = (p / m0, q / m0);
                if n1.abs() <= bound && n2.abs() <= bound {
                    return Some([n0, n1, n2]);
                }
            }
        }
        return None;
    }
    if m1 != 0 {
        // n0 is pinned; one equation remains between n1 and n2.
        if z % m1 != 0 {
            return None;
        }
        let n0 = -z / m1;
        if n0.abs() > bound || m2 * n0 != y {
            return None;
        }
        for n1 in balanced(bound) {
            let p = x + m2 * n1;
            if p % m1 == 0 {
                let n2 = p / m1;
                if n2.abs() <= bound {
                    return Some([n0, n1, n2]);
                }
            }
        }
        return None;
    }
    // m = (0, 0, m2): forces z = 0 and pins n0, n1; n2 is free.
    if x % m2 != 0 || y % m2 != 0 || z != 0 {
        return None;
    }
    let (n0, n1) = (y / m2, -x / m2);
    if n0.abs() <= bound && n1.abs() <= bound {
        Some([n0, n1, 0])
    } else {
        None
    }
}

/// A cross-product preimage of (x, y, z), scanning a box of the given
/// half-width in the order 0, 1, -1, 2, -2, ...
pub fn gauss_lift_with_bound(x: i64, y: i64, z: i64, bound: i64) -> Result<GaussLift> {
    if (x, y, z) == (0, 0, 0) {
        return Err(Error::PreconditionViolated(
            "lift needs a nonzero triple".into(),
        ));
    }
    lift_scan(x, y, z, bound).ok_or(Error::LiftSearchExhausted { x, y, z, bound })
}

/// A cross-product preimage of (x, y, z) under the default search policy:
/// box half-width doubling from 2 up to a hard cap of eight times
/// 1 + ceil(sqrt(x^2 + y^2 + z^2)), first hit wins.
pub fn gauss_lift(x: i64, y: i64, z: i64) -> Result<GaussLift> {
    if (x, y, z) == (0, 0, 0) {
        return Err(Error::PreconditionViolated(
            "lift needs a nonzero triple".into(),
        ));
    }
    let norm = x * x + y * y + z * z;
    let cap = 8 * (1 + isqrt(norm) + i64::from(isqrt(norm) * isqrt(norm) != norm));
    let mut bound = 2;
    loop {
        if let Some(lift) = lift_scan(x, y, z, bound) {
            return Ok(lift);
        }
        if bound >= cap {
            return Err(Error::LiftSearchExhausted { x, y, z, bound });
        }
        bound = (2 * bound).min(cap);
    }
}

/// The form (sum m_i^2, 2 sum m_i n_i, sum n_i^2) induced by a lift; its
/// discriminant is -4 |m x n|^2.
pub fn form_from_lift(lift: &GaussLift) -> QuadForm {
    let a: i64 = lift.m.iter().map(|&v| v * v).sum();
    let b: i64 = 2 * lift
        .m
        .iter()
        .zip(&lift.n)
        .map(|(&p, &q)| p * q)
        .sum::<i64>();
    let c: i64 = lift.n.iter().map(|&v| v * v).sum();
    let form = QuadForm { a, b, c };
    let v = lift.cross();
    debug_assert_eq!(
        form.discriminant(),
        -4 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    );
    form
}

/// Composite map from a self-conjugate 6-core of n to a reduced form of
/// discriminant -96n - 140: abacus, family classification, three-squares
/// triple, cross-product preimage, induced form, reduction. The output
/// identifies a class with its inverse (b taken non-negative).
pub fn phi_sc6(lambda: &Partition) -> Result<QuadForm> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(lambda.to_string()));
    }
    let abacus = normalize_abacus(lambda, 6)?;
    let class = classify_sc6(&abacus)?;
    let (x, y, z) = sc6_to_triple(&class, lambda.size());
    let lift = gauss_lift(x, y, z)?;
    let reduced = form_from_lift(&lift).reduce();
    Ok(QuadForm {
        a: reduced.a,
        b: reduced.b.abs(),
        c: reduced.c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let f = QuadForm::new(1, 0, 13).unwrap();
        assert_eq!(f.reduce(), f);
        assert_eq!(
            QuadForm::new(7, 0, 5).unwrap().reduce(),
            QuadForm::new(5, 0, 7).unwrap()
        );
        let g = QuadForm::new(2, 6, 7).unwrap();
        assert_eq!(g.discriminant(), -20);
        assert_eq!(g.reduce(), QuadForm::new(2, 2, 3).unwrap());
    }

    #[test]
    fn reduce_is_idempotent_and_preserves_discriminant() {
        // Deterministic sweep over a small box of positive definite forms.
        for a in 1..=9i64 {
            for b in -9..=9i64 {
                for c in 1..=9i64 {
                    if b * b - 4 * a * c >= 0 {
                        continue;
                    }
                    let f = QuadForm::new(a, b, c).unwrap();
                    let r = f.reduce();
                    assert!(r.is_reduced(), "{f} -> {r}");
                    assert_eq!(r.discriminant(), f.discriminant());
                    assert_eq!(r.reduce(), r);
                }
            }
        }
    }

    #[test]
    fn class_count_examples() {
        assert_eq!(class_count(-52).unwrap(), 2);
        assert_eq!(class_count(-3).unwrap(), 1);
        assert_eq!(class_count(-4).unwrap(), 1);
        assert_eq!(class_count_7primitive(-2548).unwrap(), 12);
        assert!(class_count(-5).is_err());
        assert!(class_count(5).is_err());
    }

    #[test]
    fn weighted_count_examples() {
        // disc -3: only (1,1,1) with weight 1/3.
        assert_eq!(class_count_weighted(-3).unwrap(), (1, 3));
        // disc -4: only (1,0,1) with weight 1/2.
        assert_eq!(class_count_weighted(-4).unwrap(), (1, 2));
        // disc -52: (1,0,13) and (2,2,7), both of full weight.
        assert_eq!(class_count_weighted(-52).unwrap(), (2, 1));
    }

    #[test]
    fn reduced_forms_of_52() {
        let forms = reduced_forms(-52).unwrap();
        assert_eq!(
            forms,
            vec![
                QuadForm::new(1, 0, 13).unwrap(),
                QuadForm::new(2, 2, 7).unwrap()
            ]
        );
    }

    #[test]
    fn lift_examples() {
        let lift = gauss_lift(1, 0, 0).unwrap();
        assert_eq!(lift.cross(), [1, 0, 0]);
        // The standard-basis lift induces the principal form of
        // discriminant -4.
        let standard = GaussLift {
            m: [0, 1, 0],
            n: [0, 0, 1],
        };
        assert_eq!(standard.cross(), [1, 0, 0]);
        assert_eq!(form_from_lift(&standard), QuadForm::new(1, 0, 1).unwrap());

        let lift315 = gauss_lift(3, 1, 5).unwrap();
        assert_eq!(lift315.cross(), [3, 1, 5]);
        assert_eq!(form_from_lift(&lift315).discriminant(), -140);

        assert!(gauss_lift(0, 0, 0).is_err());
    }

    #[test]
    fn lift_sign_change_inverts_class() {
        for (x, y, z) in [(3, 1, 5), (3, 1, 7), (9, 7, 11)] {
            let plus = form_from_lift(&gauss_lift(x, y, z).unwrap()).reduce();
            let minus = form_from_lift(&gauss_lift(-x, y, z).unwrap()).reduce();
            assert_eq!(minus, plus.inverse());
        }
    }

    #[test]
    fn lift_choice_does_not_change_class() {
        // Row operations (m, n) -> (m, n + m) and (m + n, n) fix the cross
        // product, so the reduced form must agree up to inversion.
        let (x, y, z) = (3, 1, 5);
        let lift = gauss_lift(x, y, z).unwrap();
        let base = form_from_lift(&lift).reduce();
        let canonical = QuadForm {
            a: base.a,
            b: base.b.abs(),
            c: base.c,
        };
        let variants = [
            GaussLift {
                m: lift.m,
                n: [
                    lift.n[0] + lift.m[0],
                    lift.n[1] + lift.m[1],
                    lift.n[2] + lift.m[2],
                ],
            },
            GaussLift {
                m: [
                    lift.m[0] + lift.n[0],
                    lift.m[1] + lift.n[1],
                    lift.m[2] + lift.n[2],
                ],
                n: lift.n,
            },
            GaussLift {
                m: [-lift.n[0], -lift.n[1], -lift.n[2]],
                n: lift.m,
            },
        ];
        for v in variants {
            assert_eq!(v.cross(), [x, y, z]);
            let f = form_from_lift(&v).reduce();
            assert_eq!(
                QuadForm {
                    a: f.a,
                    b: f.b.abs(),
                    c: f.c
                },
                canonical
            );
        }
    }

    #[test]
    fn sc6_image_discriminants() {
        let empty = Partition::empty();
        let form = phi_sc6(&empty).unwrap();
        assert_eq!(form.discriminant(), -140);
        assert!(form.is_reduced());
    }

    #[test]
    fn display_form() {
        assert_eq!(QuadForm::new(2, -2, 7).unwrap().to_string(), "(2,-2,7)");
    }
}
