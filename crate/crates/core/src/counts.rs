//! Closed-form counts attached to a quadratic form: value pre-images, sums of
//! two level sets in the plane, orthogonal group orders and totally
//! isotropic subspaces.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::SquareClass;
use crate::qform::{QuadraticForm, Vector, VectorSpace};

fn pow(f: u128, e: u32) -> Result<u128> {
    f.checked_pow(e).ok_or(Error::Overflow("power of the field order"))
}

/// `|{v ∈ F^n : q(v) = a}|`, zero vector included when `a = 0`.
pub fn count_preimage(q: &QuadraticForm, a: u32) -> Result<u128> {
    let field = q.field();
    field.check(a as u64)?;
    let f = field.order() as u128;
    let n = q.dim() as u32;
    if n == 0 {
        return Ok(u128::from(a == 0));
    }
    let m = n / 2;
    let ovf = || Error::Overflow("count_preimage");
    if n.is_multiple_of(2) {
        let top = pow(f, 2 * m - 1)?;
        let mid = pow(f, m)?;
        let low = pow(f, m - 1)?;
        let hyperbolic = q.is_hyperbolic();
        let r = match (hyperbolic, a == 0) {
            (true, true) => top.checked_add(mid).map(|x| x - low),
            (true, false) => Some(top - low),
            (false, true) => Some(top - mid + low),
            (false, false) => top.checked_add(low),
        };
        r.ok_or_else(ovf)
    } else {
        let top = pow(f, 2 * m)?;
        if a == 0 {
            return Ok(top);
        }
        let mid = pow(f, m)?;
        let det = q.determinant()?;
        let sign = field.from_int(if m.is_multiple_of(2) { 1 } else { -1 });
        if field.square_class(field.mul(field.mul(sign, det), a)) == SquareClass::Square {
            top.checked_add(mid).ok_or_else(ovf)
        } else {
            Ok(top - mid)
        }
    }
}

fn require_dim2(q: &QuadraticForm) -> Result<()> {
    if q.dim() == 2 {
        Ok(())
    } else {
        Err(Error::DimensionNotTwo)
    }
}

/// Solves `A t² + B t + C = 0` over the field; roots in ascending order.
fn solve_quadratic(q: &QuadraticForm, a2: u32, b1: u32, c0: u32) -> Vec<u32> {
    let f = q.field();
    if a2 == 0 {
        return match (b1, c0) {
            (0, 0) => f.elements().collect(),
            (0, _) => Vec::new(),
            _ => vec![f.div(f.neg(c0), b1).unwrap()],
        };
    }
    let mut roots = if f.is_char2() {
        if b1 == 0 {
            // t² = C/A has exactly one root
            vec![f.sqrt(f.div(c0, a2).unwrap()).unwrap()]
        } else {
            // t = (B/A) s turns the equation into s² + s = AC/B²
            let scale = f.div(b1, a2).unwrap();
            let rhs = f.div(f.mul(a2, c0), f.mul(b1, b1)).unwrap();
            match f.wp_preimage(rhs).unwrap() {
                Some(s) => vec![f.mul(scale, s), f.mul(scale, f.add(s, 1))],
                None => Vec::new(),
            }
        }
    } else {
        let four = f.from_int(4);
        let disc = f.sub(f.mul(b1, b1), f.mul(four, f.mul(a2, c0)));
        match f.sqrt(disc) {
            Some(s) => {
                let two_a = f.add(a2, a2);
                let r1 = f.div(f.sub(s, b1), two_a).unwrap();
                let r2 = f.div(f.sub(f.neg(s), b1), two_a).unwrap();
                if r1 == r2 {
                    vec![r1]
                } else {
                    vec![r1, r2]
                }
            }
            None => Vec::new(),
        }
    };
    roots.sort_unstable();
    roots
}

/// All pairs `(u, v)` with `q(u) = a`, `q(v) = b`, `u + v = w` for a plane
/// form `q`.
///
/// The condition `q(w − u) = b` is linear in `u` given `q(u) = a`:
/// `b(u, w) = q(w) + a − b`. One coordinate is eliminated through that
/// constraint and the remaining one solves a univariate quadratic.
pub fn decompose_sum(q: &QuadraticForm, w: &[u32], a: u32, b: u32) -> Result<Vec<(Vector, Vector)>> {
    require_dim2(q)?;
    let f = q.field();
    f.check(a as u64)?;
    f.check(b as u64)?;
    if w.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: w.len(),
        });
    }
    if VectorSpace::is_zero(w) {
        return Err(Error::ZeroVector);
    }
    let space = q.space();
    let lin = [q.polar(&[1, 0], w), q.polar(&[0, 1], w)];
    let i = if lin[0] != 0 { 0 } else { 1 };
    let j = 1 - i;
    let rhs = f.sub(f.add(q.eval(w), a), b);
    // u(t) = u0 + t d satisfies the linear constraint for every t
    let mut u0 = vec![0; 2];
    u0[i] = f.div(rhs, lin[i])?;
    let mut d = vec![0; 2];
    d[j] = 1;
    d[i] = f.neg(f.div(lin[j], lin[i])?);
    let a2 = q.eval(&d);
    let b1 = q.polar(&u0, &d);
    let c0 = f.sub(q.eval(&u0), a);
    Ok(solve_quadratic(q, a2, b1, c0)
        .into_iter()
        .map(|t| {
            let u = space.add(&u0, &space.scale(t, &d));
            let v = space.sub(w, &u);
            (u, v)
        })
        .collect())
}

/// `f + 1` for an anisotropic plane, `f − 1` for a hyperbolic one.
fn plane_k(q: &QuadraticForm) -> u64 {
    let f = q.field().order() as u64;
    if q.is_isotropic() {
        f - 1
    } else {
        f + 1
    }
}

fn check_nonzero_pair(q: &QuadraticForm, a: u32, b: u32) -> Result<()> {
    let f = q.field();
    f.check(a as u64)?;
    f.check(b as u64)?;
    if a == 0 || b == 0 {
        return Err(Error::NotApplicable("values must be nonzero"));
    }
    Ok(())
}

/// The sums `w = u + v` with `q(w) = 0`, for an isotropic plane and `a ≠ b`.
///
/// In hyperbolic coordinates `q = xy`, `V_a = {(s, a/s)}`, and `(c, 0)` is
/// `(s, a/s) + (−bs/a, −a/s)` for the single `s = ac/(a − b)`; likewise
/// `(0, c)`. These `2k` vectors have exactly one decomposition each, whatever
/// the class of `ab`, and use `2k` of the `k²` pairs. For `a = b` they
/// collapse to `w = 0`.
fn isotropic_sums(q: &QuadraticForm, a: u32, b: u32) -> u64 {
    if a != b && q.is_isotropic() {
        2 * plane_k(q)
    } else {
        0
    }
}

/// Number of nonzero `w` with exactly one decomposition `w = u + v`,
/// `q(u) = a`, `q(v) = b`, for a plane form.
///
/// Among anisotropic `w` a unique decomposition forces `ab` to be a square
/// and the count is `k` (`a = b`) or `2k` (`a ≠ b`), or `0` and `k` in
/// characteristic 2. Isotropic `w` add [`isotropic_sums`].
pub fn unique_decomposition_count(q: &QuadraticForm, a: u32, b: u32) -> Result<u64> {
    require_dim2(q)?;
    check_nonzero_pair(q, a, b)?;
    let f = q.field();
    let k = plane_k(q);
    let anisotropic = if f.square_class(f.mul(a, b)) == SquareClass::NonSquare {
        0
    } else {
        match (f.is_char2(), a == b) {
            (false, true) => k,
            (false, false) => 2 * k,
            (true, true) => 0,
            (true, false) => k,
        }
    };
    Ok(anisotropic + isotropic_sums(q, a, b))
}

/// `|V_a + V_b|` for a plane form, `0` included when `a = b`.
///
/// Pairs with an anisotropic sum come two per `w` except the unique ones
/// above; the isotropic sums of [`isotropic_sums`] take one pair each, which
/// adds `k` to the count obtained by halving all `k²` pairs.
pub fn sumset_size(q: &QuadraticForm, a: u32, b: u32) -> Result<u64> {
    require_dim2(q)?;
    check_nonzero_pair(q, a, b)?;
    let f = q.field();
    let k = plane_k(q);
    let generic = if f.is_char2() {
        if a == b {
            k * (k - 1) / 2 + 1
        } else {
            k * (k + 1) / 2
        }
    } else if f.square_class(f.mul(a, b)) == SquareClass::NonSquare {
        k * k / 2
    } else if a == b {
        k * k / 2 + 1
    } else {
        k * (k + 2) / 2
    };
    Ok(generic + isotropic_sums(q, a, b) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetProfile {
    pub a: u32,
    pub b: u32,
    pub k: u64,
    pub unique_count: u64,
    pub sumset_size: u64,
}

pub fn sumset_profile(q: &QuadraticForm, a: u32, b: u32) -> Result<SumsetProfile> {
    Ok(SumsetProfile {
        a,
        b,
        k: {
            require_dim2(q)?;
            plane_k(q)
        },
        unique_count: unique_decomposition_count(q, a, b)?,
        sumset_size: sumset_size(q, a, b)?,
    })
}

/// Whether some `w ∈ V_1 + V_1` has `q(w) = a`, for a plane form
/// representing 1.
pub fn v1v1_reachable(q: &QuadraticForm, a: u32) -> Result<bool> {
    require_dim2(q)?;
    let f = q.field();
    f.check(a as u64)?;
    if a == 0 {
        return Err(Error::NotApplicable("a must be nonzero"));
    }
    if q.find_vector_with_value(1, false).is_none() {
        return Err(Error::OneNotRepresented);
    }
    if f.is_char2() {
        let t = f.add(q.arf_value()?, f.inv(a)?);
        return f.in_wp_image(t);
    }
    if a == f.from_int(4) {
        return Ok(true);
    }
    let det = q.determinant()?;
    let s = f.sub(f.mul(f.from_int(4), a), f.mul(a, a));
    Ok(f.square_class(f.mul(det, s)) == SquareClass::Square)
}

/// `|O(q)|`. The zero-dimensional form has the trivial group.
pub fn orthogonal_group_order(q: &QuadraticForm) -> Result<u128> {
    let f = q.field().order() as u128;
    let n = q.dim() as u32;
    let ovf = || Error::Overflow("orthogonal_group_order");
    if n == 0 {
        return Ok(1);
    }
    let m = n / 2;
    let mut prod: u128 = 1;
    let last = if n % 2 == 1 { m } else { m - 1 };
    for i in 1..=last {
        prod = prod.checked_mul(pow(f, 2 * i)? - 1).ok_or_else(ovf)?;
    }
    let order = if n % 2 == 1 {
        pow(f, m * m)?.checked_mul(prod)
    } else {
        let fm = pow(f, m)?;
        let factor = if q.is_hyperbolic() { fm - 1 } else { fm + 1 };
        pow(f, m * (m - 1))?
            .checked_mul(factor)
            .and_then(|x| x.checked_mul(prod))
    };
    order.and_then(|x| x.checked_mul(2)).ok_or_else(ovf)
}

/// `t_k`, the number of totally isotropic subspaces of dimension `k ∈ {1, 2}`.
/// `t_2` is counted by enumerating ordered bases, subject to `cap` on `f^n`.
pub fn totally_isotropic_count(q: &QuadraticForm, k: usize, cap: u64) -> Result<u128> {
    let f = q.field().order() as u128;
    match k {
        1 => Ok((count_preimage(q, 0)? - 1) / (f - 1)),
        2 => {
            let space = q.space();
            space.check_cap(cap)?;
            let mut isotropic: Vec<Vector> = Vec::new();
            space.scan::<()>(|_, v| {
                if !VectorSpace::is_zero(v) && q.eval(v) == 0 {
                    isotropic.push(Vector(v.to_vec()));
                }
                ControlFlow::Continue(())
            });
            let pairs: u128 = isotropic
                .par_iter()
                .map(|v| {
                    isotropic
                        .iter()
                        .filter(|w| q.polar(v, w) == 0 && !space.in_span(v, w))
                        .count() as u128
                })
                .sum();
            Ok(pairs / ((f * f - 1) * (f * f - f)))
        }
        _ => Err(Error::NotApplicable("only dimensions 1 and 2 are supported")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn f(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn preimage_examples() {
        let h5 = QuadraticForm::hyperbolic(&f(5));
        assert_eq!(count_preimage(&h5, 1).unwrap(), 4);
        assert_eq!(count_preimage(&h5, 0).unwrap(), 9);
        let q = QuadraticForm::diag(&f(5), &[1, 1, 1]).unwrap();
        assert_eq!(count_preimage(&q, 1).unwrap(), 30);
    }

    #[test]
    fn decompose_sum_examples() {
        let f5 = f(5);
        let h5 = QuadraticForm::hyperbolic(&f5);
        // w = 2 u0 with q(u0) = 1
        let pairs = decompose_sum(&h5, &[2, 2], 1, 1).unwrap();
        assert!(pairs.contains(&(Vector(vec![1, 1]), Vector(vec![1, 1]))));
        assert!(pairs.len() <= 2);
        let h4 = QuadraticForm::hyperbolic(&f(4));
        for w in [[1u32, 1], [0, 1], [2, 3]] {
            for (u, v) in decompose_sum(&h4, &w, 1, 1).unwrap() {
                assert_ne!(u, v);
            }
        }
        assert_eq!(decompose_sum(&h5, &[0, 0], 1, 1), Err(Error::ZeroVector));
        let q3 = QuadraticForm::diag(&f5, &[1, 1, 1]).unwrap();
        assert_eq!(decompose_sum(&q3, &[1, 0, 0], 1, 1), Err(Error::DimensionNotTwo));
    }

    #[test]
    fn sumset_table_examples() {
        let f5 = f(5);
        let aniso = QuadraticForm::diag(&f5, &[1, 2]).unwrap();
        assert!(!aniso.is_isotropic());
        assert_eq!(unique_decomposition_count(&aniso, 1, 1).unwrap(), 6);
        assert_eq!(sumset_size(&aniso, 1, 1).unwrap(), 19);
        let h7 = QuadraticForm::hyperbolic(&f(7));
        // 2k anisotropic sums plus the 2k isotropic ones (c, 0), (0, c)
        assert_eq!(unique_decomposition_count(&h7, 1, 4).unwrap(), 24);
        let h4 = QuadraticForm::hyperbolic(&f(4));
        assert_eq!(unique_decomposition_count(&h4, 1, 1).unwrap(), 0);
        assert_eq!(sumset_size(&h4, 1, 2).unwrap(), 6 + 3);
        let h5 = QuadraticForm::hyperbolic(&f5);
        assert_eq!(sumset_size(&h5, 1, 2).unwrap(), 8 + 4);
    }

    #[test]
    fn reachability_examples() {
        let q = QuadraticForm::diag(&f(5), &[1, 1]).unwrap();
        assert!(!v1v1_reachable(&q, 3).unwrap());
        assert!(v1v1_reachable(&q, 4).unwrap());
        let b11 = QuadraticForm::binary(&f(2), 1, 1).unwrap();
        assert!(v1v1_reachable(&b11, 1).unwrap());
    }

    #[test]
    fn group_order_examples() {
        let f5 = f(5);
        let b11 = QuadraticForm::diag(&f5, &[1, 2]).unwrap();
        assert_eq!(orthogonal_group_order(&b11).unwrap(), 12);
        let q = QuadraticForm::hyperbolic_sum(&f5, 2);
        assert_eq!(orthogonal_group_order(&q).unwrap(), 28800);
        assert_eq!(orthogonal_group_order(&QuadraticForm::hyperbolic(&f5)).unwrap(), 8);
        assert_eq!(
            orthogonal_group_order(&QuadraticForm::diag(&f5, &[3]).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn totally_isotropic_examples() {
        let h5 = QuadraticForm::hyperbolic(&f(5));
        assert_eq!(totally_isotropic_count(&h5, 1, 1000).unwrap(), 2);
        let b11 = QuadraticForm::binary(&f(2), 1, 1).unwrap();
        assert_eq!(totally_isotropic_count(&b11, 1, 1000).unwrap(), 0);
        // 2×H over GF(3): the 2(q+1) = 8 maximal isotropic planes
        let q = QuadraticForm::hyperbolic_sum(&f(3), 2);
        assert_eq!(totally_isotropic_count(&q, 2, 1000).unwrap(), 8);
        assert!(matches!(
            totally_isotropic_count(&q, 2, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
