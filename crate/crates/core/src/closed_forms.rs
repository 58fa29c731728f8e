//! Closed-form betweenness and Wiener values for product families.
//!
//! All betweenness values are per vertex. Hamming graphs and cycle products
//! are vertex-transitive, so one value covers every vertex; grids need the
//! vertex position.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, integer, rational, ExactRational};

fn int(v: usize) -> ExactRational {
    integer(BigInt::from(v))
}

fn prod(ns: &[usize]) -> ExactRational {
    ns.iter().fold(ExactRational::one(), |acc, &n| acc * int(n))
}

fn half() -> ExactRational {
    rational(1, 2)
}

fn eighth() -> ExactRational {
    rational(1, 8)
}

/// `2^e` for possibly negative `e`.
fn pow2(e: i64) -> ExactRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        integer(p)
    } else {
        ExactRational::new(BigInt::one(), p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Parameters of a family with a closed-form betweenness.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyParams {
    Hamming(Vec<usize>),
    UniformKn {
        n: usize,
        r: usize,
    },
    Hypercube(usize),
    EvenCycles(Vec<usize>),
    OddCycles(Vec<usize>),
    Torus(usize, usize),
    /// Vertex `(a, b)` of `P_m □ P_n`, 1-based.
    Grid {
        m: usize,
        n: usize,
        a: usize,
        b: usize,
    },
}

impl FamilyParams {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyParams::Hamming(_) => "hamming",
            FamilyParams::UniformKn { .. } => "uniform-kn",
            FamilyParams::Hypercube(_) => "hypercube",
            FamilyParams::EvenCycles(_) => "even-cycles",
            FamilyParams::OddCycles(_) => "odd-cycles",
            FamilyParams::Torus(..) => "torus",
            FamilyParams::Grid { .. } => "grid",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let tag = self.tag();
        let fail = |reason: &str| Err(Error::params(tag, reason));
        match self {
            FamilyParams::Hamming(ns) => {
                if ns.is_empty() || ns.iter().any(|&n| n < 2) {
                    return fail("need at least one factor, every n_i >= 2");
                }
            }
            FamilyParams::UniformKn { n, r } => {
                if *n < 2 || *r < 1 {
                    return fail("need n >= 2 and r >= 1");
                }
            }
            FamilyParams::Hypercube(r) => {
                if *r < 1 {
                    return fail("need r >= 1");
                }
            }
            FamilyParams::EvenCycles(ns) => {
                if ns.is_empty() || ns.iter().any(|&n| n < 4 || n % 2 != 0) {
                    return fail("every cycle length must be even and at least 4");
                }
            }
            FamilyParams::OddCycles(ns) => {
                if ns.is_empty() || ns.iter().any(|&n| n < 3 || n % 2 != 1) {
                    return fail("every cycle length must be odd and at least 3");
                }
            }
            FamilyParams::Torus(m, n) => {
                if *m < 3 || *n < 3 {
                    return fail("cycle lengths must be at least 3");
                }
            }
            FamilyParams::Grid { m, n, a, b } => {
                if *m < 1 || *n < 1 || m * n < 2 {
                    return fail("grid needs at least 2 vertices");
                }
                if !(1..=*m).contains(a) || !(1..=*n).contains(b) {
                    return fail("position out of range");
                }
            }
        }
        Ok(())
    }

    pub fn betweenness(&self) -> Result<ExactRational> {
        match self {
            FamilyParams::Hamming(ns) => hamming_bc(ns),
            FamilyParams::UniformKn { n, r } => uniform_kn_bc(*n, *r),
            FamilyParams::Hypercube(r) => hypercube_bc(*r),
            FamilyParams::EvenCycles(ns) => even_cycles_bc(ns),
            FamilyParams::OddCycles(ns) => odd_cycles_bc(ns),
            FamilyParams::Torus(m, n) => torus_bc(*m, *n),
            FamilyParams::Grid { m, n, a, b } => grid_bc(*m, *n, *a, *b),
        }
    }
}

/// `K_{n_1} □ … □ K_{n_r}`: `½·Π n_i·[r − 1 − Σ 1/n_i] + ½`.
pub fn hamming_bc(ns: &[usize]) -> Result<ExactRational> {
    FamilyParams::Hamming(ns.to_vec()).validate()?;
    let r = int(ns.len());
    let inverse_sum = ns
        .iter()
        .fold(ExactRational::zero(), |acc, &n| acc + rational(1, n as i64));
    Ok(half() * prod(ns) * (r - ExactRational::one() - inverse_sum) + half())
}

/// `K_n^r`: `½[(r−1)n^r − r·n^{r−1} + 1]`.
pub fn uniform_kn_bc(n: usize, r: usize) -> Result<ExactRational> {
    FamilyParams::UniformKn { n, r }.validate()?;
    let nb = BigInt::from(n);
    let nr = integer(nb.pow(r as u32));
    let nr1 = integer(nb.pow(r as u32 - 1));
    Ok(half() * ((int(r) - ExactRational::one()) * nr - int(r) * nr1 + ExactRational::one()))
}

/// `Q_r`: `(r−2)·2^{r−2} + ½`.
pub fn hypercube_bc(r: usize) -> Result<ExactRational> {
    FamilyParams::Hypercube(r).validate()?;
    Ok(integer(r as i64 - 2) * pow2(r as i64 - 2) + half())
}

/// `C_{n_1} □ … □ C_{n_r}`, all even: `⅛[Π n_i · Σ n_i − 4(Π n_i − 1)]`.
pub fn even_cycles_bc(ns: &[usize]) -> Result<ExactRational> {
    FamilyParams::EvenCycles(ns.to_vec()).validate()?;
    let p = prod(ns);
    let s = int(ns.iter().sum());
    Ok(eighth() * (&p * s - integer(4) * (p - ExactRational::one())))
}

/// Same value via `n_i = 2k_i`: `2^{r−2}·Π k_i·[Σ k_i − 2] + ½`.
pub fn even_cycles_bc_half_lengths(ns: &[usize]) -> Result<ExactRational> {
    FamilyParams::EvenCycles(ns.to_vec()).validate()?;
    let ks: Vec<usize> = ns.iter().map(|n| n / 2).collect();
    let sum_k = int(ks.iter().sum());
    Ok(pow2(ns.len() as i64 - 2) * prod(&ks) * (sum_k - integer(2)) + half())
}

/// `C_{n_1} □ … □ C_{n_r}`, all odd: `⅛[Π n_i · Σ (n_i − 1/n_i) − 4(Π n_i − 1)]`.
pub fn odd_cycles_bc(ns: &[usize]) -> Result<ExactRational> {
    FamilyParams::OddCycles(ns.to_vec()).validate()?;
    let p = prod(ns);
    let s = ns
        .iter()
        .fold(ExactRational::zero(), |acc, &n| acc + int(n) - rational(1, n as i64));
    Ok(eighth() * (&p * s - integer(4) * (p - ExactRational::one())))
}

/// `C_m □ C_n` via the three parity cases. For mixed parity the odd length is
/// moved to `m` first.
pub fn torus_bc(m: usize, n: usize) -> Result<ExactRational> {
    FamilyParams::Torus(m, n).validate()?;
    let (m, n) = if m.is_multiple_of(2) && !n.is_multiple_of(2) {
        (n, m)
    } else {
        (m, n)
    };
    let (mi, ni) = (m as i64, n as i64);
    let value = match (m % 2, n % 2) {
        (1, 1) => rational((mi * ni - 1) * (mi + ni - 4), 8),
        (0, 0) => rational(mi * ni * ni + mi * (mi - 4) * ni + 4, 8),
        _ => rational(mi * ni * ni + (mi * mi - 4 * mi - 1) * ni + 4, 8),
    };
    Ok(value)
}

/// `C_m □ C_n` in half-length form (`m = 2k_1(+1)`, `n = 2k_2(+1)`).
pub fn torus_bc_half_lengths(m: usize, n: usize) -> Result<ExactRational> {
    FamilyParams::Torus(m, n).validate()?;
    let (m, n) = if m.is_multiple_of(2) && !n.is_multiple_of(2) {
        (n, m)
    } else {
        (m, n)
    };
    let (k1, k2) = ((m / 2) as i64, (n / 2) as i64);
    let choose2 = |k: i64| rational(k * (k - 1), 2);
    Ok(match (m % 2, n % 2) {
        (1, 1) => integer(k1 * k2 * (k1 + k2)) + choose2(k1) + choose2(k2),
        (0, 0) => integer(k1 * k2 * (k1 + k2 - 2)) + half(),
        _ => integer(k1 * k2 * (k1 + k2 - 1)) + rational((k2 - 1) * (k2 - 1), 2),
    })
}

/// Betweenness of vertex `(a, b)` (1-based) in `P_m □ P_n` by the quadrant sum.
///
/// The row and column through `x = (a, b)` split the grid into four closed
/// quadrants. `x` lies on a geodesic of `{u, v}` iff the pair straddles it
/// diagonally, so the sum runs over `A × B` and `C × D`. Pairs on the row or
/// column through `x` fall in both diagonal products, each with `δ = 1`, and
/// are subtracted once.
pub fn grid_bc(m: usize, n: usize, a: usize, b: usize) -> Result<ExactRational> {
    FamilyParams::Grid { m, n, a, b }.validate()?;
    let max_d = (m - 1) + (n - 1);
    let table = exact::BinomialTable::new(max_d);
    let sigma = |(i1, j1): (usize, usize), (i2, j2): (usize, usize)| {
        let (di, dj) = (i1.abs_diff(i2), j1.abs_diff(j2));
        table.get(di + dj, di).clone()
    };
    let x = (a, b);
    let cells = |rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>| {
        rows.flat_map(move |i| cols.clone().map(move |j| (i, j)))
            .filter(move |&c| c != x)
            .collect::<Vec<_>>()
    };
    let quad_a = cells(1..=a, 1..=b);
    let quad_b = cells(a..=m, b..=n);
    let quad_c = cells(1..=a, b..=n);
    let quad_d = cells(a..=m, 1..=b);

    let mut acc = exact::DependencySum::new();
    for (first, second) in [(&quad_a, &quad_b), (&quad_c, &quad_d)] {
        for &u in first {
            let to_x = sigma(u, x);
            for &v in second {
                acc.add(&to_x * sigma(x, v), sigma(u, v));
            }
        }
    }
    let collinear = (a - 1) * (m - a) + (b - 1) * (n - b);
    Ok(acc.to_rational() - int(collinear))
}

/// `W(C_n)`: `n³/8` for even `n`, `(n³ − n)/8` for odd `n`.
pub fn cycle_wiener(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::params("cycle", "need n >= 3"));
    }
    let cube = BigUint::from(n).pow(3);
    Ok(if n.is_multiple_of(2) {
        cube / 8u32
    } else {
        (cube - n) / 8u32
    })
}

/// `W(C_{n_1} □ … □ C_{n_r})` for uniform parity; mixed parities are
/// rejected (use [`crate::product::product_wiener`]).
pub fn cycle_product_wiener(ns: &[usize], parity: Parity) -> Result<BigUint> {
    let expected = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    if ns.is_empty() || ns.iter().any(|&n| n < 3 || n % 2 != expected) {
        return Err(Error::params(
            "cycle-product",
            format!("every cycle length must be >= 3 and {parity:?}"),
        ));
    }
    let p = prod(ns);
    let s = ns.iter().fold(ExactRational::zero(), |acc, &n| match parity {
        Parity::Even => acc + int(n),
        Parity::Odd => acc + int(n) - rational(1, n as i64),
    });
    let w = eighth() * &p * &p * s;
    debug_assert!(w.is_integer());
    Ok(w.to_integer().to_biguint().expect("non-negative"))
}

/// Corner-to-corner geodesics in `P_{n+1}^k`: `(kn)! / (n!)^k`.
pub fn debruijn_count(k: usize, n: usize) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::params("debruijn", "need k >= 1"));
    }
    Ok(exact::factorial((k * n) as u64) / exact::factorial(n as u64).pow(k as u32))
}
