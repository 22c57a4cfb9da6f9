//! Exact counts of maximal chord diagrams by genus.
//!
//! For genus `g` a maximal diagram has `2g` chords on `4g` points.
//!
//! * `mu(g)`: labelled maximal diagrams, `(4g)! / (4^g (2g+1)!)`.
//! * `d_star(g)`: classes up to rotation (Burnside over the cyclic group).
//! * `d_parallel(g)`: diagrams fixed by a reflection whose axis crosses two arcs.
//! * `d_vertical(g)`: diagrams fixed by a reflection whose axis crosses two points.
//! * `d_circle(g)`: classes up to rotation and reflection.
//!
//! No floating point is used; every division is checked to be exact.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub type CountBig = BigUint;

/// Published values of `(d_star, d_vertical, d_parallel, d_circle)` for
/// `g = 1..=12`, as decimal strings.
pub const KNOWN_COUNTS: [[&str; 4]; 12] = [
    ["1", "1", "1", "1"],
    ["4", "3", "5", "4"],
    ["131", "25", "41", "82"],
    ["14118", "287", "509", "7258"],
    ["2976853", "4581", "8229", "1491629"],
    ["1013582110", "90519", "166377", "506855279"],
    ["508233789579", "2162901", "4016613", "254118439668"],
    [
        "352755124921122",
        "60249195",
        "113044185",
        "176377605783906",
    ],
    [
        "324039613564554401",
        "1921751145",
        "3630535785",
        "162019808170348933",
    ],
    [
        "380751174738424280720",
        "68980179915",
        "131095612845",
        "190375587419231088550",
    ],
    [
        "557175918657122229139987",
        "2753007869745",
        "5256401729985",
        "278587959330563466969926",
    ],
    [
        "993806827312044893602464496",
        "120897239789655",
        "231748716159765",
        "496903413656110608290219603",
    ],
];

fn exact_div<T: Integer + Clone>(num: &T, den: &T, context: impl FnOnce() -> String) -> Result<T> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InexactDivision { context: context() });
    }
    Ok(q)
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> CountBig {
    if k < 0 || k as u64 > n {
        return CountBig::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = CountBig::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn factorials(up_to: usize) -> Vec<CountBig> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(CountBig::one());
    for i in 1..=up_to {
        let next = &table[i - 1] * i;
        table.push(next);
    }
    table
}

/// Number of labelled maximal diagrams of genus `g`.
pub fn mu(g: u32) -> CountBig {
    let g = g as usize;
    let fact = factorials(4 * g + 1);
    mu_from(&fact, g)
}

fn mu_from(fact: &[CountBig], g: usize) -> CountBig {
    let den = Pow::pow(CountBig::from(4u32), g) * &fact[2 * g + 1];
    let (q, r) = fact[4 * g].div_rem(&den);
    assert!(r.is_zero(), "(4g)!/(4^g (2g+1)!) not integral at g={g}");
    q
}

/// Euler's totient.
pub fn totient(q: u64) -> Result<u64> {
    if q == 0 {
        return Err(Error::Precondition("totient of 0".into()));
    }
    let mut rest = q;
    let mut phi = q;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Sum over all rotations of `4g` points of the number of fixed maximal
/// diagrams. `include_unit_odd` adds a second identity term for `q = 1` in
/// the odd-divisor sum; it exists only to show that reading is wrong.
fn rotation_fixed_sum(g: u32, include_unit_odd: bool) -> Result<CountBig> {
    let g = g as usize;
    let points = 4 * g as u64;
    let fact = factorials(4 * g);
    let mus: Vec<CountBig> = (0..=g).map(|gamma| mu_from(&fact, gamma)).collect();

    let mut total = mus[g].clone();
    for q in divisors(points) {
        let k = (points / q) as usize;
        let phi = totient(q)?;
        if q % 2 == 0 {
            let q_sq = CountBig::from(q * q);
            let mut q_pow = CountBig::one();
            let mut inner = CountBig::zero();
            for gamma in 0..=k / 4 {
                let choose =
                    exact_div(&fact[k], &(&fact[4 * gamma] * &fact[k - 4 * gamma]), || {
                        format!("C({k}, {})", 4 * gamma)
                    })?;
                inner += choose * &mus[gamma] * &q_pow;
                q_pow *= &q_sq;
            }
            total += inner * phi;
        } else if q > 1 || include_unit_odd {
            let half = k / 2;
            let den = Pow::pow(CountBig::from(2u32), half) * &fact[half + 1];
            let ratio = exact_div(&fact[k], &den, || format!("{k}!/(2^{half} ({half}+1)!)"))?;
            total += Pow::pow(CountBig::from(q), half) * ratio * phi;
        }
    }
    Ok(total)
}

/// Maximal diagrams of genus `g` up to rotation.
pub fn d_star(g: u32) -> Result<CountBig> {
    if g == 0 {
        return Err(Error::Precondition("d_star requires g >= 1".into()));
    }
    let sum = rotation_fixed_sum(g, false)?;
    exact_div(&sum, &CountBig::from(4 * g), || format!("d_star at g={g}"))
}

static PARALLEL_CACHE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// Maximal diagrams of genus `g` fixed by the reflection whose axis crosses
/// the arcs `(4g-1, 0)` and `(2g-1, 2g)`. Equivalently, rooted one-vertex
/// one-face maps with `g` edges on orientable or non-orientable surfaces.
pub fn d_parallel(g: u32) -> Result<CountBig> {
    let g = g as usize;
    let mut cache = PARALLEL_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.extend([BigInt::one(), BigInt::one()]);
    }
    while cache.len() <= g {
        let next = parallel_step(&cache, cache.len())?;
        cache.push(next);
    }
    Ok(cache[g].magnitude().clone())
}

fn parallel_step(prev: &[BigInt], g: usize) -> Result<BigInt> {
    let at = |back: usize| -> BigInt {
        g.checked_sub(back)
            .map_or_else(BigInt::zero, |i| prev[i].clone())
    };
    let gi = g as i64;
    let c3 = BigInt::from_biguint(Sign::Plus, binomial((2 * g - 3) as u64, 3));
    let c5 = BigInt::from_biguint(Sign::Plus, binomial((2 * g - 3) as u64, 5));

    let sum = BigInt::from(-(4 * gi - 1)) * at(1)
        + BigInt::from(gi * (2 * gi - 3) * (10 * gi - 9)) * at(2)
        + c3 * 30 * at(3)
        - c5 * 240 * at(4);
    let value = exact_div(&sum, &BigInt::from(gi + 1), || {
        format!("d_parallel at g={g}")
    })?;
    if value.is_negative() {
        return Err(Error::InvariantViolation(format!(
            "d_parallel({g}) = {value} is negative"
        )));
    }
    Ok(value)
}

/// Maximal diagrams of genus `g` fixed by the reflection through points
/// `0` and `2g`: `(2g - 1) d_parallel(g - 1)`.
pub fn d_vertical(g: u32) -> Result<CountBig> {
    if g == 0 {
        return Err(Error::Precondition("d_vertical requires g >= 1".into()));
    }
    Ok(d_parallel(g - 1)? * (2 * g - 1))
}

/// Maximal diagrams of genus `g` up to all dihedral symmetries,
/// `(2 d_star + d_vertical + d_parallel) / 4`.
pub fn d_circle(g: u32) -> Result<CountBig> {
    if g == 0 {
        return Err(Error::Precondition("d_circle requires g >= 1".into()));
    }
    let sum = d_star(g)? * 2u32 + d_vertical(g)? + d_parallel(g)?;
    exact_div(&sum, &CountBig::from(4u32), || format!("d_circle at g={g}"))
}

/// The four published columns for one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusCounts {
    pub g: u32,
    pub d_star: CountBig,
    pub d_vertical: CountBig,
    pub d_parallel: CountBig,
    pub d_circle: CountBig,
}

impl GenusCounts {
    pub fn compute(g: u32) -> Result<Self> {
        Ok(Self {
            g,
            d_star: d_star(g)?,
            d_vertical: d_vertical(g)?,
            d_parallel: d_parallel(g)?,
            d_circle: d_circle(g)?,
        })
    }

    pub fn columns(&self) -> [&CountBig; 4] {
        [
            &self.d_star,
            &self.d_vertical,
            &self.d_parallel,
            &self.d_circle,
        ]
    }
}

/// Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> CountBig {
    binomial(2 * n, n as i64) / (n + 1)
}

/// `(2n - 1)!!`, the number of perfect matchings of `2n` points.
pub fn double_factorial_odd(n: u64) -> CountBig {
    (1..=n).fold(CountBig::one(), |acc, i| acc * (2 * i - 1))
}
