//! Non-degenerate quadratic forms over finite fields.
//!
//! A form of dimension `n` is stored by its upper-triangular coefficient array
//! `c` with `q(x) = Σ_{i≤j} c_ij x_i x_j`. The polar form
//! `b(x, y) = q(x + y) − q(x) − q(y)` has Gram matrix `C + Cᵀ` and is derived
//! on demand, which keeps characteristic 2 on the same footing as odd
//! characteristic. Construction rejects forms whose polar form has a
//! non-trivial radical.

mod dsl;

use std::fmt;
use std::ops::{ControlFlow, Deref};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, SquareClass};
use crate::linalg;

pub use dsl::parse_form;

/// A coordinate vector in `F^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(pub Vec<u32>);

impl Deref for Vector {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Vector {
    fn from(v: Vec<u32>) -> Self {
        Vector(v)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `F^n` with the positional index `Σ x_i f^i`.
#[derive(Clone, Debug)]
pub struct VectorSpace {
    field: Field,
    dim: usize,
}

impl VectorSpace {
    pub fn new(field: Field, dim: usize) -> Self {
        VectorSpace { field, dim }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `f^n`, or `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        (self.field.order() as u64).checked_pow(self.dim as u32)
    }

    pub fn index(&self, v: &[u32]) -> u64 {
        let f = self.field.order() as u64;
        v.iter().rev().fold(0, |acc, &c| acc * f + c as u64)
    }

    pub fn coords(&self, mut index: u64) -> Vector {
        let f = self.field.order() as u64;
        let mut v = vec![0u32; self.dim];
        for c in v.iter_mut() {
            *c = (index % f) as u32;
            index /= f;
        }
        Vector(v)
    }

    pub fn add(&self, v: &[u32], w: &[u32]) -> Vector {
        Vector(v.iter().zip(w).map(|(&a, &b)| self.field.add(a, b)).collect())
    }

    pub fn sub(&self, v: &[u32], w: &[u32]) -> Vector {
        Vector(v.iter().zip(w).map(|(&a, &b)| self.field.sub(a, b)).collect())
    }

    pub fn scale(&self, c: u32, v: &[u32]) -> Vector {
        Vector(v.iter().map(|&a| self.field.mul(c, a)).collect())
    }

    pub fn is_zero(v: &[u32]) -> bool {
        v.iter().all(|&c| c == 0)
    }

    /// Whether `w` lies in the span of the nonzero vector `v`.
    pub fn in_span(&self, v: &[u32], w: &[u32]) -> bool {
        let Some(i) = v.iter().position(|&c| c != 0) else {
            return Self::is_zero(w);
        };
        let lambda = self.field.div(w[i], v[i]).unwrap();
        v.iter().zip(w).all(|(&a, &b)| self.field.mul(lambda, a) == b)
    }

    /// Linear combination `Σ c_i basis_i`.
    pub fn combine(&self, coeffs: &[u32], basis: &[Vector]) -> Vector {
        let mut out = vec![0u32; self.dim];
        for (&c, b) in coeffs.iter().zip(basis) {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(b.iter()) {
                *o = self.field.add(*o, self.field.mul(c, x));
            }
        }
        Vector(out)
    }

    /// Visits every vector in index order until `visit` breaks.
    pub fn scan<T>(&self, mut visit: impl FnMut(u64, &[u32]) -> ControlFlow<T>) -> Option<T> {
        let f = self.field.order();
        let mut v = vec![0u32; self.dim];
        let mut index = 0u64;
        loop {
            if let ControlFlow::Break(t) = visit(index, &v) {
                return Some(t);
            }
            index += 1;
            let mut i = 0;
            loop {
                if i == self.dim {
                    return None;
                }
                v[i] += 1;
                if v[i] < f {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    /// `f^n`, or [`Error::CapExceeded`] when it exceeds `cap`.
    pub fn check_cap(&self, cap: u64) -> Result<u64> {
        match self.size() {
            Some(s) if s <= cap => Ok(s),
            s => Err(Error::CapExceeded {
                needed: s.unwrap_or(u64::MAX),
                cap,
            }),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    field: Field,
    n: usize,
    // row-major n×n; entries below the diagonal are zero
    coeffs: Vec<u32>,
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm(n={}, c=[", self.n)?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = (i..self.n).map(|j| self.coeff(i, j).to_string()).collect();
            f.write_str(&row.join(" "))?;
        }
        f.write_str("])")
    }
}

/// Discriminant part of a [`CanonicalType`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Discriminant {
    /// Square class of `det(½(C + Cᵀ))`; odd characteristic.
    Determinant(SquareClass),
    /// Whether the Arf invariant lies in `℘(F)`; characteristic 2.
    Arf { in_wp_image: bool },
    /// The zero-dimensional form.
    Trivial,
}

/// Isometry class of a form over a fixed finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalType {
    pub dim: usize,
    pub disc: Discriminant,
    /// Present for even dimension.
    pub hyperbolic: Option<bool>,
    pub isotropic: bool,
}

impl CanonicalType {
    pub fn witt_index(&self) -> usize {
        match (self.dim % 2, self.hyperbolic) {
            (0, Some(true)) => self.dim / 2,
            (0, _) => (self.dim / 2).saturating_sub(1),
            _ => self.dim / 2,
        }
    }
}

impl QuadraticForm {
    /// Builds a form from its upper-triangular coefficient rows
    /// (`rows[i][j]` for `j ≥ i`; other entries must be zero).
    pub fn new(field: &Field, rows: &[Vec<u32>]) -> Result<QuadraticForm> {
        let n = rows.len();
        let mut coeffs = vec![0u32; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &c) in row.iter().enumerate() {
                let c = field.check(c as u64)?;
                if j < i && c != 0 {
                    return Err(Error::Parse("coefficient matrix must be upper triangular".to_string()));
                }
                coeffs[i * n + j] = c;
            }
        }
        let q = QuadraticForm {
            field: field.clone(),
            n,
            coeffs,
        };
        if n == 0 || !q.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        Ok(q)
    }

    /// The zero-dimensional form, the neutral element of `⊥`.
    pub fn zero(field: &Field) -> QuadraticForm {
        QuadraticForm {
            field: field.clone(),
            n: 0,
            coeffs: Vec::new(),
        }
    }

    /// `<a_1, ..., a_n>`.
    pub fn diag(field: &Field, a: &[u32]) -> Result<QuadraticForm> {
        let n = a.len();
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { a[i] } else { 0 }).collect())
            .collect();
        QuadraticForm::new(field, &rows)
    }

    /// `[a, b]`: `(x, y) ↦ ax² + xy + by²`.
    pub fn binary(field: &Field, a: u32, b: u32) -> Result<QuadraticForm> {
        QuadraticForm::new(field, &[vec![a, 1], vec![0, b]])
    }

    /// The hyperbolic plane `H = [0, 0]`.
    pub fn hyperbolic(field: &Field) -> QuadraticForm {
        QuadraticForm::binary(field, 0, 0).expect("H is non-degenerate")
    }

    /// `k × H`.
    pub fn hyperbolic_sum(field: &Field, k: usize) -> QuadraticForm {
        (0..k).fold(QuadraticForm::zero(field), |acc, _| {
            acc.orth_sum(&QuadraticForm::hyperbolic(field)).unwrap()
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> VectorSpace {
        VectorSpace::new(self.field.clone(), self.n)
    }

    pub fn coeff(&self, i: usize, j: usize) -> u32 {
        self.coeffs[i * self.n + j]
    }

    /// Upper-triangular coefficient rows.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.coeffs
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn orth_sum(&self, other: &QuadraticForm) -> Result<QuadraticForm> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.n + other.n;
        let mut coeffs = vec![0u32; n * n];
        for i in 0..self.n {
            for j in i..self.n {
                coeffs[i * n + j] = self.coeff(i, j);
            }
        }
        for i in 0..other.n {
            for j in i..other.n {
                coeffs[(self.n + i) * n + self.n + j] = other.coeff(i, j);
            }
        }
        Ok(QuadraticForm {
            field: self.field.clone(),
            n,
            coeffs,
        })
    }

    /// `c · q`.
    pub fn scale(&self, c: u32) -> Result<QuadraticForm> {
        if c == 0 {
            return Err(Error::DegenerateForm);
        }
        Ok(QuadraticForm {
            field: self.field.clone(),
            n: self.n,
            coeffs: self.coeffs.iter().map(|&x| self.field.mul(c, x)).collect(),
        })
    }

    /// Gram matrix `C + Cᵀ` of the polar form.
    pub fn gram(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Equal => f.add(self.coeff(i, i), self.coeff(i, i)),
                        std::cmp::Ordering::Less => self.coeff(i, j),
                        std::cmp::Ordering::Greater => self.coeff(j, i),
                    })
                    .collect()
            })
            .collect()
    }

    fn is_nondegenerate(&self) -> bool {
        linalg::determinant(&self.field, self.gram()) != 0
    }

    /// `q(v)`; `v` must have length `dim`.
    pub fn eval(&self, v: &[u32]) -> u32 {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.n {
            if v[i] == 0 {
                continue;
            }
            let mut row = 0;
            for j in i..self.n {
                let c = self.coeffs[i * self.n + j];
                if c != 0 && v[j] != 0 {
                    row = f.add(row, f.mul(c, v[j]));
                }
            }
            acc = f.add(acc, f.mul(v[i], row));
        }
        acc
    }

    /// The polar form `b(v, w) = q(v + w) − q(v) − q(w)`.
    pub fn polar(&self, v: &[u32], w: &[u32]) -> u32 {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.n {
            for j in i..self.n {
                let c = self.coeffs[i * self.n + j];
                if c == 0 {
                    continue;
                }
                let t = if i == j {
                    let x = f.mul(v[i], w[i]);
                    f.add(x, x)
                } else {
                    f.add(f.mul(v[i], w[j]), f.mul(v[j], w[i]))
                };
                acc = f.add(acc, f.mul(c, t));
            }
        }
        acc
    }

    fn check_dim(&self, v: &[u32]) -> Result<()> {
        if v.len() == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            })
        }
    }

    pub fn eval_checked(&self, v: &[u32]) -> Result<u32> {
        self.check_dim(v)?;
        Ok(self.eval(v))
    }

    pub fn polar_checked(&self, v: &[u32], w: &[u32]) -> Result<u32> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(self.polar(v, w))
    }

    /// The form induced on `span(basis)` in the coordinates of `basis`,
    /// without a non-degeneracy check.
    pub fn restrict_unchecked(&self, basis: &[Vector]) -> QuadraticForm {
        let k = basis.len();
        let mut coeffs = vec![0u32; k * k];
        for i in 0..k {
            coeffs[i * k + i] = self.eval(&basis[i]);
            for j in i + 1..k {
                coeffs[i * k + j] = self.polar(&basis[i], &basis[j]);
            }
        }
        QuadraticForm {
            field: self.field.clone(),
            n: k,
            coeffs,
        }
    }

    /// The form induced on `span(basis)`; fails when it is degenerate.
    pub fn restrict(&self, basis: &[Vector]) -> Result<QuadraticForm> {
        let r = self.restrict_unchecked(basis);
        if r.n > 0 && !r.is_nondegenerate() {
            return Err(Error::DegenerateRestriction);
        }
        Ok(r)
    }

    /// `det(½(C + Cᵀ))` as an element. Basis-dependent; only its square
    /// class is an invariant.
    pub fn determinant(&self) -> Result<u32> {
        let f = &self.field;
        if f.is_char2() {
            return Err(Error::WrongCharacteristic { expected: "odd" });
        }
        let det = linalg::determinant(f, self.gram());
        let half = f.inv(2).unwrap();
        Ok(f.mul(det, f.pow(half, self.n as u64)))
    }

    pub fn determinant_class(&self) -> Result<SquareClass> {
        Ok(self.field.square_class(self.determinant()?))
    }

    /// `Σ q(e_i) q(f_i)` over a symplectic basis, extracted deterministically
    /// from the standard basis. Its class in `F/℘(F)` is the Arf invariant.
    pub fn arf_value(&self) -> Result<u32> {
        let f = &self.field;
        if !f.is_char2() {
            return Err(Error::WrongCharacteristic { expected: "2" });
        }
        let space = self.space();
        let mut rest: Vec<Vector> = (0..self.n)
            .map(|i| {
                let mut e = vec![0; self.n];
                e[i] = 1;
                Vector(e)
            })
            .collect();
        let mut arf = 0;
        while !rest.is_empty() {
            let e = rest.remove(0);
            let j = rest
                .iter()
                .position(|x| self.polar(&e, x) != 0)
                .ok_or(Error::DegenerateForm)?;
            let partner = rest.remove(j);
            let partner = space.scale(f.inv(self.polar(&e, &partner))?, &partner);
            for x in rest.iter_mut() {
                let along_e = space.scale(self.polar(x, &partner), &e);
                let along_f = space.scale(self.polar(x, &e), &partner);
                *x = space.sub(&space.sub(x, &along_e), &along_f);
            }
            arf = f.add(arf, f.mul(self.eval(&e), self.eval(&partner)));
        }
        Ok(arf)
    }

    /// Whether the Arf invariant is trivial (lies in `℘(F)`).
    pub fn arf_invariant(&self) -> Result<bool> {
        self.field.in_wp_image(self.arf_value()?)
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.classify().hyperbolic == Some(true)
    }

    pub fn is_isotropic(&self) -> bool {
        self.classify().isotropic
    }

    pub fn classify(&self) -> CanonicalType {
        let n = self.n;
        if n == 0 {
            return CanonicalType {
                dim: 0,
                disc: Discriminant::Trivial,
                hyperbolic: Some(true),
                isotropic: false,
            };
        }
        let f = &self.field;
        let (disc, hyperbolic) = if f.is_char2() {
            let trivial = self.arf_invariant().expect("char 2");
            (Discriminant::Arf { in_wp_image: trivial }, Some(trivial))
        } else {
            let det = self.determinant().expect("odd char");
            let class = f.square_class(det);
            let hyperbolic = n.is_multiple_of(2).then(|| {
                let sign = f.from_int(if (n / 2).is_multiple_of(2) { 1 } else { -1 });
                f.square_class(f.mul(sign, det)) == SquareClass::Square
            });
            (Discriminant::Determinant(class), hyperbolic)
        };
        let isotropic = match n {
            1 => false,
            2 => hyperbolic == Some(true),
            _ => true,
        };
        CanonicalType {
            dim: n,
            disc,
            hyperbolic,
            isotropic,
        }
    }

    pub fn is_isometric(&self, other: &QuadraticForm) -> Result<bool> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.classify() == other.classify())
    }

    /// The representative of `ty` from the classification theorem:
    /// `k×H ⊥ <1>`, `k×H ⊥ <λ>`, `k×H`, `(k−1)×H ⊥ <1,−λ>`, or in
    /// characteristic 2 `k×H`, `(k−1)×H ⊥ [1,λ]`.
    pub fn canonical_model(field: &Field, ty: &CanonicalType) -> QuadraticForm {
        let k = ty.dim / 2;
        if ty.dim == 0 {
            return QuadraticForm::zero(field);
        }
        let lambda = field.lambda();
        if ty.hyperbolic == Some(true) {
            return QuadraticForm::hyperbolic_sum(field, k);
        }
        let tail = match ty.disc {
            Discriminant::Arf { .. } => QuadraticForm::binary(field, 1, lambda).unwrap(),
            Discriminant::Determinant(d) if ty.dim % 2 == 1 => {
                // det(k×H ⊥ <c>) = (−1)^k c up to squares
                let sign = field.from_int(if k.is_multiple_of(2) { 1 } else { -1 });
                let c = if field.square_class(sign).mul(d) == SquareClass::Square {
                    1
                } else {
                    lambda
                };
                QuadraticForm::diag(field, &[c]).unwrap()
            }
            _ => QuadraticForm::diag(field, &[1, field.neg(lambda)]).unwrap(),
        };
        let head_k = if ty.dim % 2 == 1 { k } else { k - 1 };
        QuadraticForm::hyperbolic_sum(field, head_k).orth_sum(&tail).unwrap()
    }

    /// Canonical model in the form DSL, e.g. `2*H` or `H + diag(1,-lambda)`.
    pub fn canonical_dsl(&self) -> String {
        let ty = self.classify();
        let k = ty.dim / 2;
        let hyp = |k: usize| match k {
            0 => None,
            1 => Some("H".to_string()),
            k => Some(format!("{k}*H")),
        };
        let (head, tail) = if ty.hyperbolic == Some(true) {
            (hyp(k), None)
        } else if ty.dim.is_multiple_of(2) {
            let tail = if self.field.is_char2() {
                "bin(1,wp)"
            } else {
                "diag(1,-lambda)"
            };
            (hyp(k - 1), Some(tail.to_string()))
        } else {
            let model = QuadraticForm::canonical_model(&self.field, &ty);
            let c = model.coeff(ty.dim - 1, ty.dim - 1);
            let tail = if c == 1 { "diag(1)" } else { "diag(lambda)" };
            (hyp(k), Some(tail.to_string()))
        };
        [head, tail].into_iter().flatten().collect::<Vec<_>>().join(" + ")
    }

    /// Human-readable canonical model, e.g. `2×H` or `H ⊥ <1,-λ>`.
    pub fn canonical_name(&self) -> String {
        self.canonical_dsl()
            .replace(" + ", " ⊥ ")
            .replace("*H", "×H")
            .replace("diag(1,-lambda)", "<1,-λ>")
            .replace("diag(lambda)", "<λ>")
            .replace("diag(1)", "<1>")
            .replace("bin(1,wp)", "[1,λ]")
    }

    /// Least-index vector with `q(v) = b`. For `b = 0` the zero vector is
    /// returned only when `allow_zero` is set; otherwise the least nonzero
    /// isotropic vector.
    pub fn find_vector_with_value(&self, b: u32, allow_zero: bool) -> Option<Vector> {
        if b == 0 && allow_zero {
            return Some(Vector(vec![0; self.n]));
        }
        self.space().scan(|_, v| {
            if !VectorSpace::is_zero(v) && self.eval(v) == b {
                ControlFlow::Break(Vector(v.to_vec()))
            } else {
                ControlFlow::Continue(())
            }
        })
    }

    /// Splits off `span(v)` for an anisotropic `v` (odd characteristic).
    pub fn split_off_vector(&self, v: &[u32]) -> Result<Split> {
        self.check_dim(v)?;
        if VectorSpace::is_zero(v) {
            return Err(Error::ZeroVector);
        }
        if self.field.is_char2() {
            return Err(Error::DegenerateRestriction);
        }
        if self.eval(v) == 0 {
            return Err(Error::IsotropicSplitVector);
        }
        self.split_off(&[Vector(v.to_vec())])
    }

    /// Splits off `span(v, w)` when the restriction is non-degenerate.
    pub fn split_off_plane(&self, v: &[u32], w: &[u32]) -> Result<Split> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        self.split_off(&[Vector(v.to_vec()), Vector(w.to_vec())])
    }

    fn split_off(&self, head: &[Vector]) -> Result<Split> {
        let restriction = self.restrict(head)?;
        let complement_basis = self.orthogonal_complement(head);
        let complement = self.restrict(&complement_basis)?;
        let mut basis = head.to_vec();
        basis.extend(complement_basis);
        Ok(Split {
            restriction,
            complement,
            basis,
        })
    }

    /// Basis of `{x : b(x, s) = 0 for all s ∈ vs}`.
    pub fn orthogonal_complement(&self, vs: &[Vector]) -> Vec<Vector> {
        let gram = self.gram();
        let rows: Vec<Vec<u32>> = vs
            .iter()
            .map(|s| {
                (0..self.n)
                    .map(|i| (0..self.n).fold(0, |acc, j| self.field.add(acc, self.field.mul(s[j], gram[j][i]))))
                    .collect()
            })
            .collect();
        linalg::nullspace(&self.field, &rows, self.n)
            .into_iter()
            .map(Vector)
            .collect()
    }

    /// Greedy Witt decomposition `q ≅ k×H ⊥ q_an`.
    pub fn witt_decompose(&self) -> WittDecomposition {
        let f = &self.field;
        let space = self.space();
        let mut pairs: Vec<(Vector, Vector)> = Vec::new();
        let mut basis: Vec<Vector> = (0..self.n)
            .map(|i| {
                let mut e = vec![0; self.n];
                e[i] = 1;
                Vector(e)
            })
            .collect();
        loop {
            let sub = self.restrict_unchecked(&basis);
            let Some(x) = sub.find_vector_with_value(0, false) else {
                break;
            };
            let v = space.combine(&x, &basis);
            let u = basis
                .iter()
                .find(|e| self.polar(&v, e) != 0)
                .expect("non-degenerate restriction")
                .clone();
            let u = space.scale(f.inv(self.polar(&v, &u)).unwrap(), &u);
            // w = u − q(u) v is isotropic with b(v, w) = 1
            let w = space.sub(&u, &space.scale(self.eval(&u), &v));
            let rows: Vec<Vec<u32>> = [&v, &w]
                .iter()
                .map(|t| basis.iter().map(|e| self.polar(t, e)).collect())
                .collect();
            let coeffs = linalg::nullspace(f, &rows, basis.len());
            basis = coeffs.iter().map(|c| space.combine(c, &basis)).collect();
            pairs.push((v, w));
        }
        let kernel = self.restrict_unchecked(&basis);
        let mut full = Vec::with_capacity(self.n);
        for (v, w) in &pairs {
            full.push(v.clone());
            full.push(w.clone());
        }
        full.extend(basis);
        WittDecomposition {
            witt_index: pairs.len(),
            anisotropic_kernel: kernel,
            basis: full,
        }
    }

    /// A `w` such that `q` restricted to `span(v, w)` is a hyperbolic plane.
    pub fn find_hyperbolic_containing(&self, v: &[u32]) -> Result<Vector> {
        self.check_dim(v)?;
        if VectorSpace::is_zero(v) {
            return Err(Error::ZeroVector);
        }
        if !self.is_isotropic() {
            return Err(Error::AnisotropicForm);
        }
        let space = self.space();
        let v = Vector(v.to_vec());
        space
            .scan(|_, w| {
                if space.in_span(&v, w) {
                    return ControlFlow::Continue(());
                }
                let w = Vector(w.to_vec());
                match self.restrict(&[v.clone(), w.clone()]) {
                    Ok(r) if r.is_hyperbolic() => ControlFlow::Break(w),
                    _ => ControlFlow::Continue(()),
                }
            })
            .ok_or(Error::AnisotropicForm)
    }

    /// `D(q)` or `D̃(q)` by enumeration, sorted.
    pub fn represented_set(&self, policy: ZeroPolicy, cap: u64) -> Result<Vec<u32>> {
        let space = self.space();
        space.check_cap(cap)?;
        let mut seen = vec![false; self.field.order() as usize];
        let mut isotropic = false;
        space.scan::<()>(|_, v| {
            let val = self.eval(v);
            if val == 0 {
                isotropic |= !VectorSpace::is_zero(v);
            } else {
                seen[val as usize] = true;
            }
            ControlFlow::Continue(())
        });
        if policy == ZeroPolicy::IncludeIfIsotropic && isotropic {
            seen[0] = true;
        }
        Ok((0..self.field.order()).filter(|&x| seen[x as usize]).collect())
    }

    /// Histogram of `q` over all of `F^n`.
    pub fn value_histogram(&self, cap: u64) -> Result<Vec<u64>> {
        let space = self.space();
        space.check_cap(cap)?;
        let mut hist = vec![0u64; self.field.order() as usize];
        space.scan::<()>(|_, v| {
            hist[self.eval(v) as usize] += 1;
            ControlFlow::Continue(())
        });
        Ok(hist)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroPolicy {
    /// `D(q)`: nonzero represented values.
    Nonzero,
    /// `D̃(q)`: additionally 0 when `q` is isotropic.
    IncludeIfIsotropic,
}

/// `q ≅ restriction ⊥ complement`; `basis` lists the split-off vectors
/// followed by a basis of their orthogonal complement.
#[derive(Debug, Clone)]
pub struct Split {
    pub restriction: QuadraticForm,
    pub complement: QuadraticForm,
    pub basis: Vec<Vector>,
}

#[derive(Debug, Clone)]
pub struct WittDecomposition {
    pub witt_index: usize,
    pub anisotropic_kernel: QuadraticForm,
    /// Hyperbolic pairs `(v_1, w_1, ..., v_k, w_k)` followed by a kernel basis.
    pub basis: Vec<Vector>,
}
