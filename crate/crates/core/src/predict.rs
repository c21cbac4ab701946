//! Closed-form predictions of graph invariants of `G(q, a)`.
//!
//! Each predictor returns its value together with a clause tag naming the
//! case of the classification that produced it, so that a disagreement with
//! the brute-force engine in [`crate::graph`] points at a specific rule.

use serde::{Deserialize, Serialize};

use crate::counts::{count_preimage, orthogonal_group_order, totally_isotropic_count};
use crate::error::{Error, Result};
use crate::gf::{Field, SquareClass};
use crate::graph::{Extended, GraphJob};
use crate::qform::{QuadraticForm, Vector};

/// A predicted value with the rule that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicted<T> {
    pub value: T,
    pub clause: &'static str,
}

fn predicted<T>(value: T, clause: &'static str) -> Predicted<T> {
    Predicted { value, clause }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterValue {
    Exact(u64),
    /// The diameter is known to lie in `lo..=hi`.
    Interval {
        lo: u64,
        hi: u64,
    },
    Infinite,
}

impl DiameterValue {
    pub fn contains(&self, d: Extended) -> bool {
        match (*self, d) {
            (DiameterValue::Exact(x), Extended::Finite(y)) => x == y,
            (DiameterValue::Interval { lo, hi }, Extended::Finite(y)) => (lo..=hi).contains(&y),
            (DiameterValue::Infinite, Extended::Infinite) => true,
            _ => false,
        }
    }
}

pub type DiameterPrediction = Predicted<DiameterValue>;

fn field_of(q: &QuadraticForm) -> &Field {
    q.field()
}

/// Whether `a` is the value of some nonzero vector; computed from the
/// classification, without enumeration.
pub fn represents(q: &QuadraticForm, a: u32) -> bool {
    let f = field_of(q);
    match (q.dim(), a) {
        (0, _) => false,
        (_, 0) => q.is_isotropic(),
        (1, a) => f.square_class(f.mul(a, q.coeff(0, 0))) == SquareClass::Square,
        _ => true,
    }
}

/// Square class of `x · det(q)`.
fn signed_det_class(q: &QuadraticForm, x: u32) -> SquareClass {
    let f = field_of(q);
    f.square_class(f.mul(x, q.determinant().expect("odd characteristic")))
}

pub fn predict_connected(q: &QuadraticForm, a: u32) -> Predicted<bool> {
    let f = field_of(q);
    if a == 0 && !q.is_isotropic() {
        return predicted(false, "connected.zero-anisotropic");
    }
    if q.dim() == 1 {
        if !represents(q, a) {
            return predicted(false, "connected.dim1-unrepresented");
        }
        if f.degree() > 1 {
            return predicted(false, "connected.dim1-extension-field");
        }
    }
    if a != 0 && f.order() <= 4 && q.dim() == 2 && q.is_hyperbolic() {
        return predicted(false, "connected.small-hyperbolic-plane");
    }
    predicted(true, "connected.generic")
}

pub fn predict_diameter(q: &QuadraticForm, a: u32) -> DiameterPrediction {
    use DiameterValue::*;
    let f = field_of(q);
    let order = f.order() as u64;
    if a == 0 {
        return if q.is_isotropic() {
            predicted(Exact(2), "diameter.zero.isotropic")
        } else {
            predicted(Infinite, "diameter.zero.anisotropic")
        };
    }
    match q.dim() {
        1 => {
            if f.degree() == 1 && represents(q, a) {
                predicted(Exact((f.characteristic() as u64 - 1) / 2), "diameter.dim1.prime-field")
            } else {
                predicted(Infinite, "diameter.dim1.disconnected")
            }
        }
        2 if q.is_hyperbolic() => {
            if order <= 4 {
                predicted(Infinite, "diameter.dim2.hyperbolic.small-field")
            } else {
                predicted(Interval { lo: 3, hi: 4 }, "diameter.dim2.hyperbolic")
            }
        }
        2 => match order {
            2 => predicted(Exact(1), "diameter.dim2.anisotropic.f2"),
            3 | 4 => predicted(Exact(2), "diameter.dim2.anisotropic.f3-f4"),
            _ => predicted(Exact(3), "diameter.dim2.anisotropic"),
        },
        3 => {
            if signed_det_class(q, f.neg(a)) == SquareClass::Square {
                predicted(Exact(2), "diameter.dim3.neg-a-det-square")
            } else {
                predicted(Exact(3), "diameter.dim3.neg-a-det-nonsquare")
            }
        }
        _ => predicted(Exact(2), "diameter.dim4plus"),
    }
}

/// Exact diameter of `G(H, a)` for `f ≥ 5`, by breadth-first search.
pub fn resolve_hyperbolic_interval(field: &Field, a: u32, cap: u64) -> Result<u64> {
    field.check(a as u64)?;
    if field.order() < 5 {
        return Err(Error::NotApplicable(
            "the hyperbolic-plane graph is disconnected for f ≤ 4",
        ));
    }
    if a == 0 {
        return Err(Error::NotApplicable("a must be nonzero"));
    }
    let graph = GraphJob::new(QuadraticForm::hyperbolic(field), a)
        .with_max_vertices(cap)
        .build()?;
    graph
        .distance_spectrum()
        .diameter
        .finite()
        .ok_or_else(|| Error::Disagreement("hyperbolic-plane graph is disconnected".into()))
}

/// `[a, a⁻¹]`; degenerate in characteristic 3.
fn binary_a_inverse(field: &Field, a: u32) -> Result<QuadraticForm> {
    QuadraticForm::binary(field, a, field.inv(a)?)
}

pub fn predict_girth(q: &QuadraticForm, a: u32) -> Predicted<Extended> {
    use Extended::*;
    let f = field_of(q);
    if !represents(q, a) {
        return predicted(Infinite, "girth.edgeless");
    }
    if a == 0 {
        let h = QuadraticForm::hyperbolic(f);
        let exceptional = f.order() == 2
            && (q.classify() == h.classify()
                || q.classify() == h.orth_sum(&QuadraticForm::binary(f, 1, 1).unwrap()).unwrap().classify());
        return if exceptional {
            predicted(Finite(4), "girth.zero.f2-exception")
        } else {
            predicted(Finite(3), "girth.zero")
        };
    }
    match q.dim() {
        1 => predicted(Finite(f.characteristic() as u64), "girth.dim1"),
        2 => {
            if f.order() == 2 && q.is_hyperbolic() {
                predicted(Infinite, "girth.dim2.f2-hyperbolic")
            } else if f.characteristic() == 3 {
                // the triangle (0, x, −x) with x ∈ V_a, since q(2x) = q(x) in characteristic 3
                predicted(Finite(3), "girth.dim2.char3")
            } else if binary_a_inverse(f, a).is_ok_and(|b| b.classify() == q.classify()) {
                predicted(Finite(3), "girth.dim2.binary-a-inverse")
            } else {
                predicted(Finite(4), "girth.dim2.other")
            }
        }
        _ => predicted(Finite(3), "girth.dim3plus"),
    }
}

/// How `c2` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleRoute {
    /// `q ≅ <a> ⊥ q'`.
    Diag,
    /// `q ≅ [a, a⁻¹] ⊥ q'`.
    Binary,
    /// `a = 0`, from totally isotropic subspaces.
    Isotropic0,
    /// `a` is not represented; no edges.
    Edgeless,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCountPrediction {
    pub c1: u128,
    pub c2: u128,
    pub total: u128,
    pub route: TriangleRoute,
    /// `c2` by the diagonal route, when it applies.
    pub c2_diag: Option<u128>,
    /// `c2` by the binary route, when it applies.
    pub c2_binary: Option<u128>,
}

/// A form of dimension `dim` whose discriminant combines with that of
/// `head` to the discriminant of `whole`, i.e. the `q'` in
/// `whole ≅ head ⊥ q'` (Witt cancellation makes it unique). `None` when no
/// such `q'` exists.
fn complement_form(whole: &QuadraticForm, head: &QuadraticForm) -> Option<QuadraticForm> {
    let f = field_of(whole);
    let dim = whole.dim().checked_sub(head.dim())?;
    let model = if f.is_char2() {
        let arf = f.add(whole.arf_value().ok()?, head.arf_value().ok()?);
        let trivial = f.in_wp_image(arf).ok()?;
        match (dim, trivial) {
            (0, true) => QuadraticForm::zero(f),
            (0, false) => return None,
            (d, true) => QuadraticForm::hyperbolic_sum(f, d / 2),
            (d, false) => QuadraticForm::hyperbolic_sum(f, d / 2 - 1)
                .orth_sum(&QuadraticForm::binary(f, 1, f.lambda()).unwrap())
                .unwrap(),
        }
    } else {
        let det = f.div(whole.determinant().ok()?, head.determinant().ok()?).ok()?;
        let last = if f.square_class(det) == SquareClass::Square {
            1
        } else {
            f.lambda()
        };
        match dim {
            0 if last == 1 => QuadraticForm::zero(f),
            0 => return None,
            d => {
                let mut c = vec![1; d];
                c[d - 1] = last;
                QuadraticForm::diag(f, &c).unwrap()
            }
        }
    };
    let check = head.orth_sum(&model).ok()?;
    (check.classify() == whole.classify()).then_some(model)
}

fn c2_diag(q: &QuadraticForm, a: u32) -> Result<Option<u128>> {
    let f = field_of(q);
    if f.is_char2() {
        return Ok(None);
    }
    let head = QuadraticForm::diag(f, &[a])?;
    let Some(rest) = complement_form(q, &head) else {
        return Ok(None);
    };
    let three_a = f.mul(f.from_int(3), a);
    // in characteristic 3 the zero vector of q' gives w = −v, which is not a c2 triangle
    let partners = count_preimage(&rest, three_a)? - u128::from(three_a == 0);
    let va = count_preimage(q, a)?;
    Ok(Some(va * partners / 2))
}

fn c2_binary(q: &QuadraticForm, a: u32) -> Result<Option<u128>> {
    let f = field_of(q);
    if f.characteristic() == 3 {
        return Ok(None);
    }
    let plane = binary_a_inverse(f, a)?;
    let Some(rest) = complement_form(q, &plane) else {
        return Ok(Some(0));
    };
    let three_a = f.mul(f.from_int(3), a);
    let num = count_preimage(&plane, three_a)?
        .checked_mul(orthogonal_group_order(q)?)
        .ok_or(Error::Overflow("triangle count"))?;
    let den = orthogonal_group_order(&plane)? * orthogonal_group_order(&rest)?;
    if num % den != 0 {
        return Err(Error::Disagreement(format!(
            "group-order quotient {num}/{den} is not integral"
        )));
    }
    Ok(Some(num / den))
}

/// Triangle counts. For `a = 0` the count of totally isotropic planes is
/// obtained by enumeration, subject to `cap` on `f^n`.
pub fn predict_triangles(q: &QuadraticForm, a: u32, cap: u64) -> Result<TriangleCountPrediction> {
    let f = field_of(q);
    f.check(a as u64)?;
    let order = f.order() as u128;
    let vertices = order.checked_pow(q.dim() as u32).ok_or(Error::Overflow("f^n"))?;
    let finish = |c1: u128, c2: u128, route, c2_diag, c2_binary| {
        let total = (c1 + c2)
            .checked_mul(vertices)
            .ok_or(Error::Overflow("triangle total"))?
            / 3;
        Ok(TriangleCountPrediction {
            c1,
            c2,
            total,
            route,
            c2_diag,
            c2_binary,
        })
    };
    if !represents(q, a) {
        return finish(0, 0, TriangleRoute::Edgeless, None, None);
    }
    if a == 0 {
        let t1 = totally_isotropic_count(q, 1, cap)?;
        let c1 = t1 * ((order - 1) * (order - 2) / 2);
        let c2 = if q.dim() < 4 {
            0
        } else {
            totally_isotropic_count(q, 2, cap)? * ((order * order - 1) * (order * order - order) / 2)
        };
        return finish(c1, c2, TriangleRoute::Isotropic0, None, None);
    }
    let c1 = if f.characteristic() == 3 {
        count_preimage(q, a)? / 2
    } else {
        0
    };
    let diag = c2_diag(q, a)?;
    let binary = c2_binary(q, a)?;
    match (diag, binary) {
        (Some(d), Some(b)) if d != b => Err(Error::Disagreement(format!(
            "c2 by diagonal route {d}, by binary route {b}"
        ))),
        (Some(d), _) => finish(c1, d, TriangleRoute::Diag, diag, binary),
        (None, Some(b)) => finish(c1, b, TriangleRoute::Binary, diag, binary),
        (None, None) => Err(Error::NoRouteApplicable),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FourCyclePrediction {
    Count { total: u128, clause: &'static str },
    NotCovered,
}

impl FourCyclePrediction {
    pub fn total(&self) -> Option<u128> {
        match self {
            FourCyclePrediction::Count { total, .. } => Some(*total),
            FourCyclePrediction::NotCovered => None,
        }
    }
}

pub fn predict_four_cycles(q: &QuadraticForm, a: u32) -> FourCyclePrediction {
    let f = field_of(q);
    let fo = f.order() as u128;
    let count = |total, clause| FourCyclePrediction::Count { total, clause };
    if f.order() == 2 && a == 1 && q.dim() == 4 {
        let exceptional = QuadraticForm::hyperbolic(f)
            .orth_sum(&QuadraticForm::binary(f, 1, 1).unwrap())
            .unwrap();
        if q.classify() == exceptional.classify() {
            return count(900, "four-cycles.f2-h-plus-anisotropic-plane");
        }
    }
    if q.dim() != 2 || !represents(q, a) {
        return FourCyclePrediction::NotCovered;
    }
    let f2 = fo * fo;
    let char2 = f.is_char2();
    match (a == 0, q.is_isotropic(), char2) {
        (false, true, false) => count(f2 * (fo - 1) * (fo - 3) / 8, "four-cycles.isotropic"),
        (false, true, true) => count(f2 * (fo - 1) * (fo - 2) / 8, "four-cycles.isotropic.char2"),
        (false, false, false) => count(f2 * (fo + 1) * (fo - 1) / 8, "four-cycles.anisotropic"),
        (false, false, true) => count(f2 * fo * (fo + 1) / 8, "four-cycles.anisotropic.char2"),
        (true, _, _) => {
            let m = fo - 1;
            let choose3 = if m >= 3 { m * (m - 1) * (m - 2) / 6 } else { 0 };
            count(f2 * (6 * choose3 + m * m) / 4, "four-cycles.zero")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceClass {
    One,
    Two,
    MoreThanTwo,
}

/// Distance class of `v` from the origin in `G(q, a)` for a ternary form in
/// odd characteristic.
pub fn distance_class_dim3(q: &QuadraticForm, a: u32, v: &Vector) -> Result<DistanceClass> {
    let f = field_of(q);
    if q.dim() != 3 {
        return Err(Error::DimensionNotThree);
    }
    if f.is_char2() {
        return Err(Error::WrongCharacteristic { expected: "odd" });
    }
    if a == 0 {
        return Err(Error::NotApplicable("a must be nonzero"));
    }
    let value = q.eval_checked(v)?;
    if v.iter().all(|&c| c == 0) {
        return Err(Error::ZeroVector);
    }
    Ok(if value == a {
        DistanceClass::One
    } else if value == 0 && signed_det_class(q, f.neg(a)) == SquareClass::NonSquare {
        DistanceClass::MoreThanTwo
    } else {
        DistanceClass::Two
    })
}
