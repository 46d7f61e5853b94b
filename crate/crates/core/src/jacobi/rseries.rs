//! The matrix series of `R(z)` at `z = infinity, 0, 1` and the Lax equation they satisfy.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use super::coeffs::{coeff_value, p_factor, s_total, Kind};
use crate::error::Result;
use crate::exact::{parse_ratfun, RationalFunction, TruncatedSeries, VarSet};

const V: VarSet = VarSet::Jacobi;

/// Expansion point, with local coordinate `1/z`, `z` and `1 - z` respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Infinity,
    Zero,
    One,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Point::Infinity => "infinity",
            Point::Zero => "zero",
            Point::One => "one",
        })
    }
}

/// A 2x2 matrix of rational functions in `N, alpha, beta`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2(pub [[RationalFunction; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        let z = RationalFunction::zero(V);
        Mat2([[z.clone(), z.clone()], [z.clone(), z]])
    }

    /// The projector `E11 = diag(1, 0)`.
    pub fn e11() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = RationalFunction::one(V);
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.0[i][j]
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].add(&o.0[i][j]))))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].sub(&o.0[i][j]))))
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].mul(c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][0].mul(&o.0[0][j]).add(&self.0[i][1].mul(&o.0[1][j])))
        }))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> RationalFunction {
        self.0[0][0].add(&self.0[1][1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }

    /// `sigma3 M sigma3`: flips the off-diagonal signs.
    pub fn conj_sigma3(&self) -> Self {
        let mut m = self.clone();
        m.0[0][1] = m.0[0][1].neg();
        m.0[1][0] = m.0[1][0].neg();
        m
    }

    pub fn swap_ab(&self) -> Self {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].swap_ab())))
    }
}

/// `R(z)` expanded in the local coordinate at `point`, coefficients `0..=order`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixSeries2x2 {
    point: Point,
    coeffs: Vec<Mat2>,
}

impl MatrixSeries2x2 {
    pub fn point(&self) -> Point {
        self.point
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &Mat2 {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[Mat2] {
        &self.coeffs
    }

    /// Replaces one coefficient; used to build corrupted series in checks.
    pub fn set_coeff(&mut self, m: usize, c: Mat2) {
        self.coeffs[m] = c;
    }

    /// Entry `(i, j)` as a univariate truncated series.
    pub fn entry_series(&self, i: usize, j: usize) -> TruncatedSeries {
        let cs: Vec<RationalFunction> = self.coeffs.iter().map(|m| m.0[i][j].clone()).collect();
        TruncatedSeries::univariate(V, 1, 0, self.order() as u32, &cs)
    }

    /// First order at which `tr R != 1`, if any.
    pub fn trace_defect(&self) -> Option<usize> {
        self.coeffs.iter().enumerate().position(|(m, c)| {
            let t = c.trace();
            if m == 0 {
                !t.is_one()
            } else {
                !t.is_zero()
            }
        })
    }

    /// First order at which `det R != 0`, if any.
    pub fn det_defect(&self) -> Option<usize> {
        (0..self.coeffs.len()).find(|&m| {
            let mut parts = Vec::new();
            for i in 0..=m {
                let (x, y) = (&self.coeffs[i], &self.coeffs[m - i]);
                parts.push(x.0[0][0].mul(&y.0[1][1]));
                parts.push(x.0[0][1].mul(&y.0[1][0]).neg());
            }
            !crate::exact::sum_is_zero(&parts)
        })
    }
}

fn rf(s: &str) -> RationalFunction {
    parse_ratfun(s, V).expect("internal expression")
}

fn coefficient_matrix(p: Point, m: usize) -> Result<Mat2> {
    let inv_s = s_total().inv()?;
    let pf = p_factor();
    let out = match p {
        Point::Infinity => {
            if m == 0 {
                return Ok(Mat2::e11());
            }
            let l = m - 1;
            let a = coeff_value(Kind::A, l)?.mul(&RationalFunction::from_int(V, l as i64));
            let b = coeff_value(Kind::B, l)?;
            Mat2([[a.clone(), pf.mul(&b.shift_n(1))], [b.neg(), a.neg()]]).scale(&inv_s)
        }
        Point::Zero => {
            let a = coeff_value(Kind::ATilde, m)?.mul(&RationalFunction::from_int(V, m as i64 + 1));
            let b = coeff_value(Kind::BTilde, m)?;
            let mut r = Mat2([[a.clone(), pf.mul(&b.shift_n(1)).neg()], [b, a.neg()]]).scale(&inv_s);
            if m == 0 {
                r = r.add(&Mat2::e11());
            }
            r
        }
        // Reflection x -> 1 - x exchanges alpha and beta and conjugates R by sigma3.
        Point::One => coefficient_matrix(Point::Zero, m)?.swap_ab().conj_sigma3(),
    };
    Ok(out)
}

type Cache = RwLock<HashMap<Point, Vec<Mat2>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficient matrices `R_0..=R_order` at `p`, memoized.
pub(crate) fn r_coeffs(p: Point, order: usize) -> Result<Vec<Mat2>> {
    if let Some(v) = cache().read().unwrap().get(&p) {
        if v.len() > order {
            return Ok(v[..=order].to_vec());
        }
    }
    let have = cache().read().unwrap().get(&p).map_or(0, Vec::len);
    let mut fresh = Vec::new();
    for m in have..=order {
        fresh.push(coefficient_matrix(p, m)?);
    }
    let mut c = cache().write().unwrap();
    let v = c.entry(p).or_default();
    if v.len() == have {
        v.extend(fresh);
    }
    Ok(v[..=order].to_vec())
}

/// The series `R^[p]` through order `order` in the local coordinate.
pub fn r_series(p: Point, order: usize) -> Result<MatrixSeries2x2> {
    Ok(MatrixSeries2x2 { point: p, coeffs: r_coeffs(p, order)? })
}

/// `U~_0` and `U~_1`, the residues of the Lax matrix at `z = 0` and `z = 1`.
pub fn lax_matrices() -> (Mat2, Mat2) {
    let inv_s = s_total().inv().expect("s is nonzero");
    let a0 = rf("(2*N*(alpha+beta+N)+alpha*(alpha+beta))/2");
    let a1 = rf("(2*N*(alpha+beta+N)+beta*(alpha+beta))/2");
    let p = p_factor().neg();
    let one = RationalFunction::one(V);
    let u0 = Mat2([[a0.clone(), p.clone()], [one.clone(), a0.neg()]]).scale(&inv_s);
    let u1 = Mat2([[a1.neg(), p], [one, a1]]).scale(&inv_s);
    (u0, u1)
}

/// Checks `dR/dz = [U, R]` on a computed series, order by order.
///
/// Multiplying through by the local factor turns the equation into a
/// two-term relation between consecutive coefficients:
///
/// ```text
/// zero:      m R_m - (m-1) R_{m-1} = [U0, R_m] + [U1 - U0, R_{m-1}]
/// infinity:  m R_m - (m-1) R_{m-1} = [U1 - U0, R_m] + [U0, R_{m-1}]
/// one:      -m R_m + (m-1) R_{m-1} = [U1, R_m] + [U0 - U1, R_{m-1}]
/// ```
///
/// Returns the first failing order.
pub fn lax_residue(series: &MatrixSeries2x2) -> std::result::Result<(), usize> {
    let (u0, u1) = lax_matrices();
    let d = u1.sub(&u0);
    let zero = Mat2::zero();
    for m in 0..series.coeffs.len() {
        let rm = &series.coeffs[m];
        let rp = if m == 0 { &zero } else { &series.coeffs[m - 1] };
        let mi = RationalFunction::from_int(V, m as i64);
        let mp = RationalFunction::from_int(V, m as i64 - 1);
        let lhs = rm.scale(&mi).sub(&rp.scale(&mp));
        let (lhs, rhs) = match series.point {
            Point::Zero => (lhs, u0.commutator(rm).add(&d.commutator(rp))),
            Point::Infinity => (lhs, d.commutator(rm).add(&u0.commutator(rp))),
            Point::One => (lhs.scale(&RationalFunction::from_int(V, -1)), u1.commutator(rm).sub(&d.commutator(rp))),
        };
        if !lhs.sub(&rhs).is_zero() {
            return Err(m);
        }
    }
    Ok(())
}

/// True iff the Lax equation holds through order `order` at all three points.
pub fn lax_residue_check(order: usize) -> Result<bool> {
    for p in [Point::Zero, Point::Infinity, Point::One] {
        if lax_residue(&r_series(p, order)?).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}
