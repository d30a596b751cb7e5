//! Multi-modular algorithms for integer polynomials.
//!
//! Resultants are computed modulo word-sized primes by evaluating every
//! variable except the eliminated one, taking univariate resultants and
//! interpolating. The images are combined by Chinese remaindering until the
//! modulus exceeds a bound on the result's coefficients.
//!
//! GCDs are computed modulo primes by dense interpolation that carries the
//! cofactors along. An integer candidate `H` with cofactors `A`, `B` is
//! accepted once `|H|_1 * |A|_inf` and `|H|_1 * |B|_inf` are below half the
//! modulus. At that point `H * A = gamma * f` and `H * B = gamma * g` hold
//! over the integers and not just modulo the product of the primes. No
//! trial division is needed.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{Monomial, Poly};

/// Descending primes below `2^31`, so a product of two residues fits in a
/// `u64`.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        const WANT: usize = 1 << 14;
        const TOP: u64 = 1 << 31;
        const WINDOW: u64 = 1 << 16;
        let root = 46_341usize; // ceil(sqrt(2^31))
        let mut composite = vec![false; root + 1];
        let mut base = Vec::new();
        for i in 2..=root {
            if !composite[i] {
                base.push(i as u64);
                for j in (i * i..=root).step_by(i) {
                    composite[j] = true;
                }
            }
        }
        let mut out = Vec::with_capacity(WANT);
        let mut hi = TOP;
        while out.len() < WANT {
            let lo = hi - WINDOW;
            let mut sieve = vec![true; WINDOW as usize];
            for &q in &base {
                let mut j = lo.div_ceil(q) * q;
                while j < hi {
                    sieve[(j - lo) as usize] = false;
                    j += q;
                }
            }
            out.extend((0..WINDOW).rev().filter(|&i| sieve[i as usize]).map(|i| lo + i));
            hi = lo;
        }
        out.truncate(WANT);
        out
    })
}

/// Arithmetic modulo a prime `p < 2^31`.
#[derive(Clone, Copy, Debug)]
struct Field {
    p: u64,
}

impl Field {
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Replaces every (nonzero) element by its inverse with one exponentiation.
    fn inv_all(self, xs: &mut [u64]) {
        let mut prefix = Vec::with_capacity(xs.len());
        let mut acc = 1;
        for &x in xs.iter() {
            prefix.push(acc);
            acc = self.mul(acc, x);
        }
        let mut inv = self.inv(acc);
        for (x, before) in xs.iter_mut().zip(prefix).rev() {
            let xi = self.mul(inv, before);
            inv = self.mul(inv, *x);
            *x = xi;
        }
    }

    fn reduce(self, c: &BigInt) -> u64 {
        let r = (c.magnitude() % self.p).to_u64().expect("residue fits");
        if c.sign() == Sign::Minus {
            self.neg(r)
        } else {
            r
        }
    }
}

// Univariate polynomials over Z/p: coefficient vectors, lowest power first,
// without trailing zeros (the zero polynomial is empty).

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Quotient and remainder of `a` by the nonzero trimmed `b`.
fn div_rem(k: Field, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - db];
    let inv = k.inv(b[db]);
    for top in (db..r.len()).rev() {
        let c = k.mul(r[top], inv);
        q[top - db] = c;
        if c != 0 {
            let shift = top - db;
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = k.sub(r[shift + i], k.mul(c, bi));
            }
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn make_monic(k: Field, a: &mut [u64]) {
    if let Some(&l) = a.last() {
        let inv = k.inv(l);
        for c in a.iter_mut() {
            *c = k.mul(*c, inv);
        }
    }
}

/// Monic gcd; empty only if both inputs are zero.
fn uni_gcd(k: Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = div_rem(k, &a, &b);
        a = b;
        b = r;
    }
    make_monic(k, &mut a);
    a
}

fn uni_mul(k: Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

fn uni_eval(k: Field, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| k.add(k.mul(acc, x), c))
}

/// Resultant of two nonzero trimmed polynomials, by the Euclidean
/// algorithm: `Res(a, b) = (-1)^(n m) lc(b)^(n - deg r) Res(b, r)` with
/// `r = a mod b`.
fn uni_resultant(k: Field, f: &[u64], g: &[u64]) -> u64 {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    let mut acc = 1;
    loop {
        let n = a.len() - 1;
        let m = b.len() - 1;
        if m == 0 {
            return k.mul(acc, k.pow(b[0], n as u64));
        }
        let (_, r) = div_rem(k, &a, &b);
        if r.is_empty() {
            return 0;
        }
        if n % 2 == 1 && m % 2 == 1 {
            acc = k.neg(acc);
        }
        acc = k.mul(acc, k.pow(b[m], (n + 1 - r.len()) as u64));
        a = b;
        b = r;
    }
}

/// Dense polynomial over Z/p. `dims[i]` is one more than the degree bound
/// in variable `i`; variable 0 varies fastest in `data`, so fixing the last
/// variable selects a contiguous slice.
#[derive(Clone, Debug, PartialEq)]
struct Dense {
    dims: Vec<usize>,
    data: Vec<u64>,
}

impl Dense {
    fn zeros(dims: Vec<usize>) -> Self {
        let n = dims.iter().product();
        Dense {
            dims,
            data: vec![0; n],
        }
    }

    fn constant(nvars: usize, c: u64) -> Self {
        Dense {
            dims: vec![1; nvars],
            data: vec![c],
        }
    }

    fn from_univariate(mut a: Vec<u64>) -> Self {
        if a.is_empty() {
            a.push(0);
        }
        Dense {
            dims: vec![a.len()],
            data: a,
        }
    }

    fn nvars(&self) -> usize {
        self.dims.len()
    }

    fn exponents(&self, mut i: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&d| {
                let e = i % d;
                i /= d;
                e
            })
            .collect()
    }

    fn index(dims: &[usize], exps: &[usize]) -> usize {
        let mut idx = 0;
        let mut stride = 1;
        for (&e, &d) in exps.iter().zip(dims) {
            idx += e * stride;
            stride *= d;
        }
        idx
    }

    fn nonzero_terms(&self) -> impl Iterator<Item = (Vec<usize>, u64)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.exponents(i), c))
    }

    /// Exponent vector of the lex-largest term, variable 0 most significant.
    fn leading_exponents(&self) -> Option<Vec<usize>> {
        self.nonzero_terms().map(|(e, _)| e).max()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nvars()];
        for (e, _) in self.nonzero_terms() {
            for (d, x) in deg.iter_mut().zip(e) {
                *d = (*d).max(x);
            }
        }
        deg
    }

    fn reshaped(&self, dims: &[usize]) -> Dense {
        let mut out = Dense::zeros(dims.to_vec());
        for (e, c) in self.nonzero_terms() {
            debug_assert!(e.iter().zip(dims).all(|(x, d)| x < d), "term outside new dims");
            out.data[Dense::index(dims, &e)] = c;
        }
        out
    }

    fn trimmed(&self) -> Dense {
        let dims: Vec<usize> = self.degrees().iter().map(|d| d + 1).collect();
        if dims == self.dims {
            self.clone()
        } else {
            self.reshaped(&dims)
        }
    }

    fn scaled(&self, k: Field, s: u64) -> Dense {
        Dense {
            dims: self.dims.clone(),
            data: self.data.iter().map(|&c| k.mul(c, s)).collect(),
        }
    }

    /// True if some term has full degree `dims[0] - 1` in variable 0.
    fn leading_slice_nonzero(&self) -> bool {
        let d = self.dims[0];
        self.data.iter().skip(d - 1).step_by(d).any(|&c| c != 0)
    }

    fn inner_len(&self) -> usize {
        self.dims[..self.nvars() - 1].iter().product()
    }

    /// Substitutes `a` for the last variable.
    fn eval_last(&self, k: Field, a: u64) -> Dense {
        let r = self.nvars() - 1;
        let inner = self.inner_len();
        let mut out = vec![0u64; inner];
        for e in (0..self.dims[r]).rev() {
            let slice = &self.data[e * inner..(e + 1) * inner];
            for (o, &s) in out.iter_mut().zip(slice) {
                *o = k.add(k.mul(*o, a), s);
            }
        }
        Dense {
            dims: self.dims[..r].to_vec(),
            data: out,
        }
    }

    /// Coefficient of the inner monomial with flat index `j`, as a trimmed
    /// polynomial in the last variable.
    fn fiber(&self, j: usize) -> Vec<u64> {
        let inner = self.inner_len();
        let mut f: Vec<u64> = (0..self.dims[self.nvars() - 1])
            .map(|e| self.data[j + e * inner])
            .collect();
        trim(&mut f);
        f
    }

    /// Applies `op` to every fiber along the last variable.
    fn map_fibers(&self, mut op: impl FnMut(&[u64]) -> Vec<u64>) -> Dense {
        let inner = self.inner_len();
        let fibers: Vec<Vec<u64>> = (0..inner)
            .map(|j| {
                let f = self.fiber(j);
                if f.is_empty() {
                    f
                } else {
                    op(&f)
                }
            })
            .collect();
        let len = fibers.iter().map(Vec::len).max().unwrap_or(0).max(1);
        let mut dims = self.dims.clone();
        *dims.last_mut().unwrap() = len;
        let mut out = Dense::zeros(dims);
        for (j, f) in fibers.iter().enumerate() {
            for (e, &c) in f.iter().enumerate() {
                out.data[j + e * inner] = c;
            }
        }
        out
    }

    /// Monic gcd of the fibers: the content with respect to the last
    /// variable.
    fn fiber_content(&self, k: Field) -> Vec<u64> {
        let mut g: Vec<u64> = Vec::new();
        for j in 0..self.inner_len() {
            let f = self.fiber(j);
            if f.is_empty() {
                continue;
            }
            g = uni_gcd(k, &g, &f);
            if g.len() == 1 {
                break;
            }
        }
        g
    }

    /// Fiber of the lex-largest inner monomial.
    fn leading_fiber(&self) -> Vec<u64> {
        let inner_dims = &self.dims[..self.nvars() - 1];
        let best = (0..self.inner_len())
            .filter(|&j| !self.fiber(j).is_empty())
            .max_by_key(|&j| {
                let mut i = j;
                inner_dims
                    .iter()
                    .map(|&d| {
                        let e = i % d;
                        i /= d;
                        e
                    })
                    .collect::<Vec<_>>()
            })
            .expect("nonzero polynomial");
        self.fiber(best)
    }
}

/// Interpolates through `(points[i], values[i])` in a new last variable;
/// all values share the same dims.
fn interpolate(k: Field, points: &[u64], values: &[Dense]) -> Dense {
    let n = points.len();
    let inner_dims = values[0].dims.clone();
    let e = values[0].data.len();
    let mut c: Vec<Vec<u64>> = values.iter().map(|v| v.data.clone()).collect();
    let mut diffs = vec![0u64; n];
    for j in 1..n {
        for i in j..n {
            diffs[i] = k.sub(points[i], points[i - j]);
        }
        k.inv_all(&mut diffs[j..n]);
        for i in (j..n).rev() {
            let (lo, hi) = c.split_at_mut(i);
            let prev = &lo[i - 1];
            for (cur, &pv) in hi[0].iter_mut().zip(prev) {
                *cur = k.mul(k.sub(*cur, pv), diffs[i]);
            }
        }
    }
    // Newton form to the power basis, by Horner in `(t - points[i])`.
    let mut coeffs = vec![vec![0u64; e]; n];
    coeffs[0].clone_from(&c[n - 1]);
    for i in (0..n - 1).rev() {
        let xi = points[i];
        let len = n - 1 - i;
        for pw in (0..=len).rev() {
            #[allow(clippy::needless_range_loop)]
            for t in 0..e {
                let hi = if pw > 0 { coeffs[pw - 1][t] } else { 0 };
                let lo = if pw < len { coeffs[pw][t] } else { 0 };
                coeffs[pw][t] = k.sub(hi, k.mul(xi, lo));
            }
        }
        for (dst, &src) in coeffs[0].iter_mut().zip(&c[i]) {
            *dst = k.add(*dst, src);
        }
    }
    let mut dims = inner_dims;
    dims.push(n);
    Dense {
        dims,
        data: coeffs.concat(),
    }
}

/// Resultant in variable 0 of `f` and `g`, whose leading slices in variable
/// 0 do not vanish. `bounds[i]` bounds the degree of the result in variable
/// `i + 1`. `None` if the field runs out of evaluation points.
fn resultant_dense(k: Field, f: &Dense, g: &Dense, bounds: &[usize]) -> Option<Dense> {
    let r = f.nvars() - 1;
    if r == 0 {
        let v = uni_resultant(k, &f.data, &g.data);
        return Some(Dense::constant(0, v));
    }
    let need = bounds[r - 1] + 1;
    let mut points = Vec::with_capacity(need);
    let mut values = Vec::with_capacity(need);
    let mut a = 0u64;
    while points.len() < need {
        if a >= k.p {
            return None;
        }
        let fa = f.eval_last(k, a);
        let ga = g.eval_last(k, a);
        if fa.leading_slice_nonzero() && ga.leading_slice_nonzero() {
            values.push(resultant_dense(k, &fa, &ga, &bounds[..r - 1])?);
            points.push(a);
        }
        a += 1;
    }
    Some(interpolate(k, &points, &values))
}

/// `gcd(f, g)` over Z/p with `h` monic in the lex order (variable 0 most
/// significant), `f = h * f_bar` and `g = h * g_bar`.
struct GcdImage {
    h: Dense,
    f_bar: Dense,
    g_bar: Dense,
}

/// GCD of two nonzero dense polynomials in the same variables, by
/// evaluating the last variable and interpolating gcd and cofactors
/// together. `None` if the field runs out of evaluation points.
fn gcd_dense(k: Field, f: &Dense, g: &Dense) -> Option<GcdImage> {
    let nvars = f.nvars();
    if nvars == 0 {
        return Some(GcdImage {
            h: Dense::constant(0, 1),
            f_bar: f.clone(),
            g_bar: g.clone(),
        });
    }
    if nvars == 1 {
        let h = uni_gcd(k, &f.data, &g.data);
        let (fb, _) = div_rem(k, &f.data, &h);
        let (gb, _) = div_rem(k, &g.data, &h);
        return Some(GcdImage {
            h: Dense::from_univariate(h),
            f_bar: Dense::from_univariate(fb),
            g_bar: Dense::from_univariate(gb),
        });
    }
    let last = nvars - 1;
    let cf = f.fiber_content(k);
    let cg = g.fiber_content(k);
    let c = uni_gcd(k, &cf, &cg);
    let f1 = f.map_fibers(|x| div_rem(k, x, &cf).0).trimmed();
    let g1 = g.map_fibers(|x| div_rem(k, x, &cg).0).trimmed();
    let cf_c = div_rem(k, &cf, &c).0;
    let cg_c = div_rem(k, &cg, &c).0;

    let lf = f1.leading_fiber();
    let lg = g1.leading_fiber();
    let gamma = uni_gcd(k, &lf, &lg);
    let (df, dg) = (f1.dims[last] - 1, g1.dims[last] - 1);
    let need = gamma.len() - 1 + df.max(dg) + 1;

    let h_dims: Vec<usize> = (0..last).map(|i| f1.dims[i].min(g1.dims[i])).collect();
    let f_dims = f1.dims[..last].to_vec();
    let g_dims = g1.dims[..last].to_vec();

    let mut current: Option<Vec<usize>> = None;
    let mut points = Vec::with_capacity(need);
    let (mut hv, mut fv, mut gv) = (Vec::new(), Vec::new(), Vec::new());
    for a in 0..k.p {
        if uni_eval(k, &lf, a) == 0 || uni_eval(k, &lg, a) == 0 {
            continue;
        }
        let img = gcd_dense(k, &f1.eval_last(k, a), &g1.eval_last(k, a))?;
        let lm = img.h.leading_exponents().expect("gcd image is nonzero");
        if lm.iter().all(|&e| e == 0) {
            // Coprime primitive parts: the gcd is the content gcd `c`.
            return Some(GcdImage {
                h: Dense {
                    dims: lifted_dims(nvars, c.len()),
                    data: c.clone(),
                },
                f_bar: f1.map_fibers(|x| uni_mul(k, x, &cf_c)).trimmed(),
                g_bar: g1.map_fibers(|x| uni_mul(k, x, &cg_c)).trimmed(),
            });
        }
        match current.as_ref().map(|cur| lm.cmp(cur)) {
            Some(std::cmp::Ordering::Greater) => continue,
            Some(std::cmp::Ordering::Equal) => {}
            _ => {
                current = Some(lm);
                points.clear();
                hv.clear();
                fv.clear();
                gv.clear();
            }
        }
        points.push(a);
        hv.push(img.h.scaled(k, uni_eval(k, &gamma, a)).reshaped(&h_dims));
        fv.push(img.f_bar.reshaped(&f_dims));
        gv.push(img.g_bar.reshaped(&g_dims));
        if points.len() < need {
            continue;
        }
        let h = interpolate(k, &points, &hv).trimmed();
        let fb = interpolate(k, &points, &fv).trimmed();
        let gb = interpolate(k, &points, &gv).trimmed();
        let dl = |d: &Dense| d.dims[last] - 1;
        let dgamma = gamma.len() - 1;
        if dl(&h) + dl(&fb) != dgamma + df || dl(&h) + dl(&gb) != dgamma + dg {
            // Some points were unlucky without showing it in the leading
            // monomial; start over with fresh ones.
            points.clear();
            hv.clear();
            fv.clear();
            gv.clear();
            continue;
        }
        // gamma f1 = H fb = cont(H) pp(H) fb, so f1 = pp(H) * (cont(H) fb / gamma).
        let ch = h.fiber_content(k);
        let hpp = h.map_fibers(|x| div_rem(k, x, &ch).0);
        let fix = |d: &Dense, extra: &[u64]| {
            d.map_fibers(|x| div_rem(k, &uni_mul(k, &uni_mul(k, x, &ch), extra), &gamma).0)
                .trimmed()
        };
        let mut out = GcdImage {
            h: hpp.map_fibers(|x| uni_mul(k, x, &c)).trimmed(),
            f_bar: fix(&fb, &cf_c),
            g_bar: fix(&gb, &cg_c),
        };
        let lead = out.h.leading_exponents().expect("nonzero gcd");
        let l = out.h.data[Dense::index(&out.h.dims, &lead)];
        let inv = k.inv(l);
        out.h = out.h.scaled(k, inv);
        out.f_bar = out.f_bar.scaled(k, l);
        out.g_bar = out.g_bar.scaled(k, l);
        return Some(out);
    }
    None
}

/// Dims of a polynomial in the last of `nvars` variables only.
fn lifted_dims(nvars: usize, len: usize) -> Vec<usize> {
    let mut dims = vec![1; nvars];
    dims[nvars - 1] = len.max(1);
    dims
}

/// Reduction of `p` modulo the field's prime, as a dense polynomial in the
/// variables `vars` (indices into the order) with the given dims.
fn to_dense(k: Field, p: &Poly<BigInt>, vars: &[usize], dims: &[usize]) -> Dense {
    let mut d = Dense::zeros(dims.to_vec());
    for (m, c) in p.terms() {
        let exps: Vec<usize> = vars.iter().map(|&v| m.exponent(v) as usize).collect();
        d.data[Dense::index(dims, &exps)] = k.reduce(c);
    }
    d
}

/// Chinese remaindering of residues keyed by monomial. Values are kept in
/// `[0, modulus)`.
struct Crt {
    modulus: BigInt,
    values: BTreeMap<Monomial, BigInt>,
}

impl Crt {
    fn new() -> Self {
        Crt {
            modulus: BigInt::one(),
            values: BTreeMap::new(),
        }
    }

    /// Folds in the residues modulo `p` (absent monomials are zero). Returns
    /// whether any value changed.
    fn add(&mut self, p: u64, residues: BTreeMap<Monomial, u64>) -> bool {
        let k = Field { p };
        let m_inv = k.inv(k.reduce(&self.modulus));
        let mut changed = false;
        for (m, v) in self.values.iter_mut() {
            let r = residues.get(m).copied().unwrap_or(0);
            let t = k.mul(k.sub(r, k.reduce(v)), m_inv);
            if t != 0 {
                *v += &self.modulus * t;
                changed = true;
            }
        }
        for (m, r) in residues {
            if let std::collections::btree_map::Entry::Vacant(e) = self.values.entry(m) {
                let t = k.mul(r, m_inv);
                if t != 0 {
                    e.insert(&self.modulus * t);
                    changed = true;
                }
            }
        }
        self.modulus *= p;
        // Stay in the symmetric range so a settled value stops changing.
        let half = &self.modulus >> 1u32;
        for v in self.values.values_mut() {
            if *v > half {
                *v -= &self.modulus;
            }
        }
        changed
    }

    /// The values, in the symmetric range `(-modulus/2, modulus/2]`.
    fn symmetric(&self) -> BTreeMap<Monomial, BigInt> {
        self.values
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(m, v)| (m.clone(), v.clone()))
            .collect()
    }
}

fn residues(d: &Dense, vars: &[usize], arity: usize) -> BTreeMap<Monomial, u64> {
    d.nonzero_terms()
        .map(|(e, c)| {
            let mut exps = vec![0u32; arity];
            for (&v, x) in vars.iter().zip(e) {
                exps[v] = x as u32;
            }
            (Monomial::from_exponents(&exps), c)
        })
        .collect()
}

fn support_vars(polys: &[&Poly<BigInt>]) -> Vec<usize> {
    let arity = polys[0].order().arity();
    (0..arity)
        .filter(|&v| polys.iter().any(|p| p.degree_in(v) > 0))
        .collect()
}

fn deg(p: &Poly<BigInt>, v: usize) -> usize {
    p.degree_in(v).max(0) as usize
}

fn norm1(p: &Poly<BigInt>) -> BigInt {
    p.terms().map(|(_, c)| c.abs()).sum()
}

fn norm_inf(p: &Poly<BigInt>) -> BigInt {
    p.terms().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// Resultant of `f` and `g` with respect to variable `x`; both must have
/// positive degree in `x`. `None` only if the prime table runs out.
pub(crate) fn resultant(f: &Poly<BigInt>, g: &Poly<BigInt>, x: usize) -> Option<Poly<BigInt>> {
    let order = f.order();
    let (nf, ng) = (deg(f, x), deg(g, x));
    assert!(nf > 0 && ng > 0, "modular resultant needs positive degrees");
    let mut vars = vec![x];
    vars.extend(support_vars(&[f, g]).into_iter().filter(|&v| v != x));
    let dims_f: Vec<usize> = vars.iter().map(|&v| deg(f, v) + 1).collect();
    let dims_g: Vec<usize> = vars.iter().map(|&v| deg(g, v) + 1).collect();
    let bounds: Vec<usize> = vars[1..]
        .iter()
        .map(|&v| ng * deg(f, v) + nf * deg(g, v))
        .collect();
    // Every coefficient of the determinant is bounded by the product of the
    // row sums of coefficient norms: |f|_1^ng |g|_1^nf.
    let bits = ng as u64 * norm1(f).bits() + nf as u64 * norm1(g).bits() + 2;
    let mut crt = Crt::new();
    for &p in primes() {
        let k = Field { p };
        let fd = to_dense(k, f, &vars, &dims_f);
        let gd = to_dense(k, g, &vars, &dims_g);
        if !fd.leading_slice_nonzero() || !gd.leading_slice_nonzero() {
            continue;
        }
        let Some(r) = resultant_dense(k, &fd, &gd, &bounds) else {
            continue;
        };
        crt.add(p, residues(&r, &vars[1..], order.arity()));
        if crt.modulus.bits() > bits {
            return Some(Poly::from_terms(order, crt.symmetric()));
        }
    }
    None
}

/// `(h, f / h, g / h)` with `h` the gcd over the integers of the nonzero
/// `f` and `g`: integer content included, positive leading coefficient.
/// `None` only if the prime table runs out.
pub(crate) fn gcd_cofactors(
    f: &Poly<BigInt>,
    g: &Poly<BigInt>,
) -> Option<(Poly<BigInt>, Poly<BigInt>, Poly<BigInt>)> {
    assert!(!f.is_zero() && !g.is_zero(), "gcd of zero polynomial");
    let order = f.order();
    let (cont_f, cont_g) = (f.integer_content(), g.integer_content());
    let c = cont_f.gcd(&cont_g);
    let f1 = f.div_coefficient(&cont_f).expect("content divides");
    let g1 = g.div_coefficient(&cont_g).expect("content divides");
    let vars = support_vars(&[f, g]);
    let constant_gcd = || {
        Some((
            Poly::constant(order, c.clone()),
            f.div_coefficient(&c).expect("content divides"),
            g.div_coefficient(&c).expect("content divides"),
        ))
    };
    if vars.is_empty() || f1.is_constant() || g1.is_constant() {
        return constant_gcd();
    }
    let dims_f: Vec<usize> = vars.iter().map(|&v| deg(&f1, v) + 1).collect();
    let dims_g: Vec<usize> = vars.iter().map(|&v| deg(&g1, v) + 1).collect();
    let lcf = f1.leading_term().expect("nonzero").1.clone();
    let lcg = g1.leading_term().expect("nonzero").1.clone();
    let gamma = lcf.gcd(&lcg);
    let bound_f = &gamma * norm_inf(&f1);
    let bound_g = &gamma * norm_inf(&g1);

    let mut current: Option<Vec<usize>> = None;
    let (mut hc, mut fc, mut gc) = (Crt::new(), Crt::new(), Crt::new());
    for &p in primes() {
        let k = Field { p };
        if k.reduce(&lcf) == 0 || k.reduce(&lcg) == 0 {
            continue;
        }
        let fd = to_dense(k, &f1, &vars, &dims_f);
        let gd = to_dense(k, &g1, &vars, &dims_g);
        let Some(img) = gcd_dense(k, &fd, &gd) else {
            continue;
        };
        let lm = img.h.leading_exponents().expect("gcd image is nonzero");
        if lm.iter().all(|&e| e == 0) {
            return constant_gcd();
        }
        match current.as_ref().map(|cur| lm.cmp(cur)) {
            Some(std::cmp::Ordering::Greater) => continue,
            Some(std::cmp::Ordering::Equal) => {}
            _ => {
                current = Some(lm);
                hc = Crt::new();
                fc = Crt::new();
                gc = Crt::new();
            }
        }
        let h_img = img.h.scaled(k, k.reduce(&gamma));
        let arity = order.arity();
        let h_changed = hc.add(p, residues(&h_img, &vars, arity));
        fc.add(p, residues(&img.f_bar, &vars, arity));
        gc.add(p, residues(&img.g_bar, &vars, arity));
        if h_changed {
            continue;
        }
        // H A = gamma f1 and H B = gamma g1 hold modulo the product of the
        // primes; below half of it they hold over the integers.
        let m = &hc.modulus;
        let h = Poly::from_terms(order, hc.symmetric());
        let a = Poly::from_terms(order, fc.symmetric());
        let b = Poly::from_terms(order, gc.symmetric());
        let n1 = norm1(&h);
        let fits = |v: BigInt| v * 2 < *m;
        if !(fits(&n1 * norm_inf(&a)) && fits(&n1 * norm_inf(&b)))
            || !(fits(bound_f.clone()) && fits(bound_g.clone()))
        {
            continue;
        }
        // f = cont_f f1 = (c pp(H)) * (cont_f / c) cont(H) A / gamma.
        let cont_h = h.integer_content();
        let mut pp = h.div_coefficient(&cont_h).expect("content divides");
        let scale = |cof: &Poly<BigInt>, cont: &BigInt| {
            cof.scale(&(cont / &c * &cont_h))
                .div_coefficient(&gamma)
                .expect("cofactor identity is exact")
        };
        let mut fb = scale(&a, &cont_f);
        let mut gb = scale(&b, &cont_g);
        if !pp.is_sign_normalized() {
            pp = -pp;
            fb = -fb;
            gb = -gb;
        }
        return Some((pp.scale(&c), fb, gb));
    }
    None
}
