//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails:
//!
//! ```text
//! cargo test -p resproj-core --test acceptance
//! ```
//!
//! Values are checked against oracles written here: Leibniz and Gaussian
//! determinants of hand-built Sylvester matrices at integer points, a float
//! grid search, and an exhaustive rational grid search for singular points.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use resproj::random::{random_coprime_tuple, random_poly, standard_order, trial_rng, PolyShape};
use resproj::selftest::equivalence_input;
use resproj::*;

const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn order(names: &str) -> Arc<VariableOrder> {
    Arc::new(VariableOrder::parse_list(names).unwrap())
}

fn parse(text: &str, o: &Arc<VariableOrder>) -> Polynomial {
    Polynomial::parse(text, o).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

// ---------------------------------------------------------------------------
// Oracles

/// Leibniz expansion over all permutations.
fn leibniz(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let o = m[0][0].order().clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Polynomial::zero(&o);
    // Heap's algorithm; each swap flips the sign.
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    let term = |perm: &[usize], sign: i64| {
        let mut t = Polynomial::constant(&o, sign.into());
        for (i, &j) in perm.iter().enumerate() {
            t = &t * &m[i][j];
        }
        t
    };
    total = &total + &term(&perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            total = &total + &term(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

/// Exact determinant by Gaussian elimination over the rationals.
fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let pivot_row = m[col].clone();
        let p = &pivot_row[col];
        d *= p;
        for row in &mut m[col + 1..] {
            let factor = &row[col] / p;
            if factor.is_zero() {
                continue;
            }
            for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= &factor * src;
            }
        }
    }
    d
}

/// Sylvester matrix of two coefficient lists (lowest power first), using
/// the full lengths as the formal degrees.
fn sylvester(f: &[BigRational], g: &[BigRational]) -> Vec<Vec<BigRational>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, count) in [(f, n), (g, m)] {
        for i in 0..count {
            let mut row = vec![BigRational::zero(); size];
            for (k, c) in src.iter().rev().enumerate() {
                row[i + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Resultant of two univariate coefficient lists by determinant.
fn res_oracle(f: &[BigRational], g: &[BigRational]) -> BigRational {
    if f.len() == 1 {
        return pow(&f[0], g.len() - 1);
    }
    if g.len() == 1 {
        return pow(&g[0], f.len() - 1);
    }
    det(sylvester(f, g))
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// Coefficients in variable 0 (lowest first, formal degree) after fixing
/// the remaining variables to `point[1..]`.
fn specialize(p: &Polynomial, point: &[BigRational]) -> Vec<BigRational> {
    let x = p.order().var(0);
    let d = p.degree(&x).max(0) as usize;
    let mut out = vec![BigRational::zero(); d + 1];
    for (m, c) in p.terms() {
        let mut v = BigRational::from_integer(c.clone());
        for (i, &e) in m.exponents().iter().enumerate().skip(1) {
            v *= pow(&point[i], e as usize);
        }
        out[m.exponent(0) as usize] += v;
    }
    out
}

fn eval(p: &Polynomial, point: &[BigRational]) -> BigRational {
    p.terms()
        .map(|(m, c)| {
            m.exponents()
                .iter()
                .zip(point)
                .fold(BigRational::from_integer(c.clone()), |acc, (&e, x)| {
                    acc * pow(x, e as usize)
                })
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

fn uni_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn uni_derivative(a: &[BigRational]) -> Vec<BigRational> {
    if a.len() == 1 {
        return vec![BigRational::zero()];
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * q(i as i64))
        .collect()
}

fn random_point<R: Rng>(rng: &mut R, arity: usize) -> Vec<BigRational> {
    (0..arity).map(|_| q(rng.gen_range(-9..=9))).collect()
}

/// Checks `lib` (free of variable 0) against the determinant oracle at two
/// random points.
fn check_res_at_points<R: Rng>(
    rng: &mut R,
    lib: &Polynomial,
    oracle: impl Fn(&[BigRational]) -> BigRational,
    what: &str,
) -> Result<(), String> {
    for _ in 0..2 {
        let pt = random_point(rng, lib.order().arity());
        let (a, b) = (eval(lib, &pt), oracle(&pt));
        ensure(a == b, || {
            format!("{what}: library {a} vs determinant {b} at {pt:?}")
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Criteria

fn quadratic_pair() -> Outcome {
    let o = order("x,a,b,c,a1,c1");
    let x = o.variable("x").unwrap();
    let m = |rows: &[&[&str]]| -> Vec<Vec<Polynomial>> {
        rows.iter()
            .map(|r| r.iter().map(|e| parse(e, &o)).collect())
            .collect()
    };
    let big = m(&[
        &["a*a1", "b*a1", "a*c1+c*a1", "b*c1", "c*c1", "0", "0"],
        &["0", "a*a1", "b*a1", "a*c1+c*a1", "b*c1", "c*c1", "0"],
        &["0", "0", "a*a1", "b*a1", "a*c1+c*a1", "b*c1", "c*c1"],
        &["4*a*a1", "3*a1*b", "2*a*c1+2*a1*c", "b*c1", "0", "0", "0"],
        &["0", "4*a*a1", "3*a1*b", "2*a*c1+2*a1*c", "b*c1", "0", "0"],
        &["0", "0", "4*a*a1", "3*a1*b", "2*a*c1+2*a1*c", "b*c1", "0"],
        &["0", "0", "0", "4*a*a1", "3*a1*b", "2*a*c1+2*a1*c", "b*c1"],
    ]);
    let df = m(&[&["a", "b", "c"], &["2*a", "b", "0"], &["0", "2*a", "b"]]);
    let dg = m(&[&["a1", "0", "c1"], &["2*a1", "0", "0"], &["0", "2*a1", "0"]]);
    let rfg = m(&[
        &["a", "b", "c", "0"],
        &["0", "a", "b", "c"],
        &["a1", "0", "c1", "0"],
        &["0", "a1", "0", "c1"],
    ]);
    let rgf = m(&[
        &["a1", "0", "c1", "0"],
        &["0", "a1", "0", "c1"],
        &["a", "b", "c", "0"],
        &["0", "a", "b", "c"],
    ]);
    let lhs = leibniz(&big);
    let parts = [leibniz(&df), leibniz(&dg), leibniz(&rfg), leibniz(&rgf)];
    let rhs = Polynomial::product(&o, &parts);
    ensure(lhs == rhs, || format!("symbolic identity fails: {lhs} vs {rhs}"))?;

    // The library resultants reproduce each literal determinant.
    let f = parse("a*x^2 + b*x + c", &o);
    let g = parse("a1*x^2 + c1", &o);
    let fg = &f * &g;
    let lib = [
        resultant(&fg, &fg.derivative(&x).unwrap(), &x).unwrap(),
        resultant(&f, &f.derivative(&x).unwrap(), &x).unwrap(),
        resultant(&g, &g.derivative(&x).unwrap(), &x).unwrap(),
        resultant(&f, &g, &x).unwrap(),
        resultant(&g, &f, &x).unwrap(),
    ];
    let literal = [&lhs, &parts[0], &parts[1], &parts[2], &parts[3]];
    for (l, d) in lib.iter().zip(literal) {
        ensure(l == d, || {
            format!("library resultant {l} differs from literal determinant {d}")
        })?;
    }

    let mut rng = trial_rng(SEED, 0);
    let mut done = 0;
    while done < 100 {
        let vals: Vec<i64> = (0..5).map(|_| rng.gen_range(-20..=20)).collect();
        if vals[0] * vals[3] == 0 {
            continue;
        }
        let mut pt = vec![q(0)];
        pt.extend(vals.iter().map(|&v| q(v)));
        let num = |rows: &[Vec<Polynomial>]| -> Vec<Vec<BigRational>> {
            rows.iter()
                .map(|r| r.iter().map(|e| eval(e, &pt)).collect())
                .collect()
        };
        let left = det(num(&big));
        let right: BigRational = [&df, &dg, &rfg, &rgf].iter().map(|b| det(num(b))).product();
        ensure(left == right, || format!("numeric identity fails at {vals:?}"))?;
        // Library on the specialized univariate pair.
        let ux = order("x");
        let spec = |p: &Polynomial| {
            let coeffs = specialize(p, &pt);
            let terms = coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::power(1, 0, e as u32), c.to_integer()));
            Polynomial::from_terms(&ux, terms.collect::<Vec<_>>())
        };
        let (sf, sg) = (spec(&f), spec(&g));
        let sfg = &sf * &sg;
        let x0 = ux.var(0);
        let r = resultant(&sfg, &sfg.derivative(&x0).unwrap(), &x0).unwrap();
        let r = BigRational::from_integer(r.constant_value().unwrap());
        ensure(r == left, || {
            format!("specialized resultant {r} vs determinant {left} at {vals:?}")
        })?;
        done += 1;
    }
    Ok("symbolic identity and 100 specializations".into())
}

fn product_identity() -> Outcome {
    for t in 0..200 {
        let mut rng = trial_rng(SEED, t);
        let arity = rng.gen_range(1..=3usize);
        let o = standard_order(arity);
        let x = o.var(0);
        let pair = random_coprime_tuple(&mut rng, &o, &PolyShape::for_arity(arity), 2, 0);
        let (f, g) = (&pair[0], &pair[1]);
        ensure(f.degree(&x) <= 6 && g.degree(&x) <= 6, || {
            format!("trial {t}: degree above 6")
        })?;
        let fg = f * g;
        let lhs = resultant(&fg, &fg.derivative(&x).unwrap(), &x).unwrap();
        let parts = [
            resultant(f, &f.derivative(&x).unwrap(), &x).unwrap(),
            resultant(g, &g.derivative(&x).unwrap(), &x).unwrap(),
            resultant(f, g, &x).unwrap(),
            resultant(g, f, &x).unwrap(),
        ];
        let rhs = Polynomial::product(&o, &parts);
        ensure(lhs == rhs, || {
            format!("trial {t}: identity fails for f = {f}, g = {g}")
        })?;
        let oracle = |pt: &[BigRational]| {
            let c = uni_mul(&specialize(f, pt), &specialize(g, pt));
            res_oracle(&c, &uni_derivative(&c))
        };
        check_res_at_points(&mut rng, &lhs, oracle, &format!("trial {t} Res(fg, (fg)')"))?;
        let oracle = |pt: &[BigRational]| res_oracle(&specialize(f, pt), &specialize(g, pt));
        check_res_at_points(&mut rng, &parts[2], oracle, &format!("trial {t} Res(f, g)"))?;
    }
    Ok("200 pairs".into())
}

fn discriminant_and_s_fold() -> Outcome {
    for t in 0..200 {
        let mut rng = trial_rng(SEED.wrapping_add(1000), t);
        let arity = rng.gen_range(1..=3usize);
        let o = standard_order(arity);
        let x = o.var(0);
        let f = &random_coprime_tuple(&mut rng, &o, &PolyShape::for_arity(arity), 1, 0)[0];
        let df = f.derivative(&x).unwrap();
        let dis = discriminant(f, &x).unwrap();
        let lc_dis = &f.leading_coefficient(&x).unwrap() * &dis;
        for r in [
            resultant_bareiss(f, &df, &x).unwrap(),
            resultant_prs(f, &df, &x).unwrap(),
        ] {
            ensure(r == lc_dis, || {
                format!("trial {t}: Res(f, f') != Lc Dis for f = {f}")
            })?;
        }
        // The textbook discriminant is (-1)^(n(n-1)/2) Res(f, f') / a_n, and
        // this one carries the same sign again, so the signs cancel. For
        // quadratics it is 4ac - b^2 straight from the root product.
        for _ in 0..2 {
            let pt = random_point(&mut rng, arity);
            let c = specialize(f, &pt);
            let lead = c.last().unwrap().clone();
            if lead.is_zero() {
                continue;
            }
            let expect = res_oracle(&c, &uni_derivative(&c)) / &lead;
            let got = eval(&dis, &pt);
            ensure(got == expect, || {
                format!("trial {t}: Dis {got} vs oracle {expect} for f = {f}")
            })?;
            if c.len() == 3 {
                let closed = q(4) * &c[2] * &c[0] - &c[1] * &c[1];
                ensure(got == closed, || {
                    format!("trial {t}: Dis {got} vs 4ac - b^2 = {closed}")
                })?;
            }
        }
    }
    for (s, trials) in [(2usize, 100u64), (3, 100)] {
        for t in 0..trials {
            let mut rng = trial_rng(SEED.wrapping_add(2000 * s as u64), t);
            let arity = rng.gen_range(1..=3usize);
            let o = standard_order(arity);
            let x = o.var(0);
            let mut shape = PolyShape::for_arity(arity);
            if s == 3 {
                shape.max_total_degree = shape.max_total_degree.min(3);
            }
            let fs = random_coprime_tuple(&mut rng, &o, &shape, s, 0);
            let product = Polynomial::product(&o, &fs);
            let lhs = resultant(&product, &product.derivative(&x).unwrap(), &x).unwrap();
            let mut rhs = Polynomial::one(&o);
            for (i, f) in fs.iter().enumerate() {
                rhs = &rhs * &f.leading_coefficient(&x).unwrap();
                if f.degree(&x) >= 2 {
                    rhs = &rhs * &discriminant(f, &x).unwrap();
                }
                for (j, g) in fs.iter().enumerate() {
                    if i != j {
                        rhs = &rhs * &resultant(f, g, &x).unwrap();
                    }
                }
            }
            ensure(lhs == rhs, || format!("s = {s}, trial {t}: identity fails"))?;
            let oracle = |pt: &[BigRational]| {
                let c = fs
                    .iter()
                    .map(|f| specialize(f, pt))
                    .reduce(|a, b| uni_mul(&a, &b))
                    .unwrap();
                res_oracle(&c, &uni_derivative(&c))
            };
            check_res_at_points(&mut rng, &lhs, oracle, &format!("s = {s}, trial {t}"))?;
        }
    }
    Ok("200 single, 100 pairs, 100 triples".into())
}

fn set_of(set: &FactorSet) -> Vec<String> {
    let mut v: Vec<String> = set.iter().map(ToString::to_string).collect();
    v.sort();
    v
}

fn equivalence() -> Outcome {
    for t in 0..200 {
        let (o, polys) = equivalence_input(&mut trial_rng(SEED, t));
        for p in &polys {
            ensure(o.variables().all(|v| p.degree(&v) <= 3), || {
                format!("trial {t}: degree above 3")
            })?;
        }
        let report = equivalence_check(&polys, &o).map_err(|e| format!("trial {t}: {e}"))?;
        ensure(report.equal, || {
            format!("trial {t}: operators differ on {polys:?}")
        })?;
        for l in &report.levels {
            ensure(set_of(&l.brown_refined) == set_of(&l.yang_refined), || {
                format!("trial {t}: refined sets differ at {}", l.variable)
            })?;
        }
    }
    // Worked examples, expected sets by hand: Dis(x^2 + y^2 - 1, x) is a
    // multiple of y^2 - 1, and Res(x^2 + y^2 - 1, x - y, x) = 2 y^2 - 1.
    // Members are squarefree and coprime, not split into irreducibles.
    let o = order("x,y");
    let expected = |names: &[&str]| {
        let mut v: Vec<String> = names.iter().map(|n| parse(n, &o).to_string()).collect();
        v.sort();
        v
    };
    for (input, want) in [
        (vec!["x^2 + y^2 - 1"], expected(&["y^2 - 1"])),
        (
            vec!["x^2 + y^2 - 1", "x - y"],
            expected(&["y^2 - 1", "2*y^2 - 1"]),
        ),
    ] {
        let polys: Vec<Polynomial> = input.iter().map(|s| parse(s, &o)).collect();
        let report = equivalence_check(&polys, &o).map_err(|e| e.to_string())?;
        ensure(report.equal, || format!("{input:?}: operators differ"))?;
        let level = &report.levels[0];
        ensure(set_of(&level.brown_refined) == want, || {
            format!(
                "{input:?}: got {:?}, expected {want:?}",
                set_of(&level.brown_refined)
            )
        })?;
    }
    Ok("200 random inputs and 2 worked examples".into())
}

/// Smallest value of `f` on the grid `[-3, 3]^n` with step 1e-3.
fn grid_minimum(f: &Polynomial) -> f64 {
    let n = f.order().arity();
    let terms: Vec<(Vec<i32>, f64)> = f
        .terms()
        .map(|(m, c)| {
            (
                m.exponents().iter().map(|&e| e as i32).collect(),
                c.to_f64().unwrap(),
            )
        })
        .collect();
    let steps = 6001usize;
    let coord = |i: usize| -3.0 + i as f64 * 1e-3;
    let mut best = f64::INFINITY;
    let mut idx = vec![0usize; n];
    loop {
        let pt: Vec<f64> = idx.iter().map(|&i| coord(i)).collect();
        let v: f64 = terms
            .iter()
            .map(|(e, c)| c * e.iter().zip(&pt).map(|(&k, x)| x.powi(k)).product::<f64>())
            .sum();
        best = best.min(v);
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < steps {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            return best;
        }
    }
}

fn optimization() -> Outcome {
    let mut notes = Vec::new();
    for (vars, text, value) in [
        ("x,y", "x^2 + y^2", 0i64),
        ("x", "x^2 + 1", 1),
        ("x", "x^4 - 2*x^2", -1),
    ] {
        let o = order(vars);
        let f = parse(text, &o);
        let cands = candidate_minima(&f, &o).map_err(|e| format!("{text}: {e}"))?;
        ensure(cands.iter().any(|c| c.exact_root == Some(q(value))), || {
            format!("{text}: no exact candidate {value} among {cands:?}")
        })?;
        let grid = grid_minimum(&f);
        ensure((grid - value as f64).abs() <= 1e-2, || {
            format!("{text}: grid minimum {grid} disagrees with {value}")
        })?;
        notes.push(format!("{text}: {value}"));
    }
    Ok(notes.join(", "))
}

/// `f`, `df/dx` and `df/dy` at a rational point, from the terms.
fn value_and_gradient(f: &Polynomial, x: &BigRational, y: &BigRational) -> [BigRational; 3] {
    let mut out = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
    for (m, c) in f.terms() {
        let (i, j) = (m.exponent(0) as usize, m.exponent(1) as usize);
        let c = BigRational::from_integer(c.clone());
        out[0] += &c * pow(x, i) * pow(y, j);
        if i > 0 {
            out[1] += &c * q(i as i64) * pow(x, i - 1) * pow(y, j);
        }
        if j > 0 {
            out[2] += &c * q(j as i64) * pow(x, i) * pow(y, j - 1);
        }
    }
    out
}

/// Squarefree bivariate polynomial of degree at most 4 that is singular at
/// a random half-integer point, with a nonzero `Res(f, df/dx, x)`.
fn singular_poly<R: Rng>(rng: &mut R, o: &Arc<VariableOrder>) -> Polynomial {
    let x = o.var(0);
    loop {
        let (p, r) = (rng.gen_range(-6..=6i64), rng.gen_range(-6..=6i64));
        // u = 2x - p, v = 2y - r vanish at (p/2, r/2).
        let u = parse(&format!("2*x - ({p})"), o);
        let v = parse(&format!("2*y - ({r})"), o);
        let nterms = rng.gen_range(2..=5);
        let mut f = Polynomial::zero(o);
        for _ in 0..nterms {
            let d = rng.gen_range(2..=4u32);
            let i = rng.gen_range(0..=d);
            let c: i64 = loop {
                let c = rng.gen_range(-9..=9);
                if c != 0 {
                    break c;
                }
            };
            let t = &(&u.pow(i) * &v.pow(d - i)) * &Polynomial::constant(o, c.into());
            f = &f + &t;
        }
        if f.is_zero() || !f.involves(&x) || !is_squarefree(&f) {
            continue;
        }
        if resultant(&f, &f.derivative(&x).unwrap(), &x).unwrap().is_zero() {
            continue;
        }
        return f;
    }
}

fn triangular_containment() -> Outcome {
    let o = order("x,y");
    let grid: Vec<BigRational> = {
        let mut g: Vec<BigRational> = Vec::new();
        for d in 1..=3i64 {
            for n in -4 * d..=4 * d {
                let v = BigRational::new(n.into(), d.into());
                if !g.contains(&v) {
                    g.push(v);
                }
            }
        }
        g
    };
    let mut found = 0;
    for t in 0..50 {
        let mut rng = trial_rng(SEED.wrapping_add(5000), t);
        let f = singular_poly(&mut rng, &o);
        ensure(f.total_degree() <= 4, || format!("trial {t}: degree above 4"))?;
        let sys = resp_chain(&f, &o).map_err(|e| format!("trial {t}: {f}: {e}"))?;
        let mut here = 0;
        for a in &grid {
            for b in &grid {
                if !value_and_gradient(&f, a, b).iter().all(Zero::is_zero) {
                    continue;
                }
                here += 1;
                let pt = [a.clone(), b.clone()];
                for g in &sys.equations {
                    let v = eval(g, &pt);
                    ensure(v.is_zero(), || {
                        format!("trial {t}: {g} is {v} at ({a}, {b}) for f = {f}")
                    })?;
                }
            }
        }
        ensure(here > 0, || {
            format!("trial {t}: planted singular point of {f} not found")
        })?;
        found += here;
    }
    Ok(format!("50 polynomials, {found} singular points"))
}

fn resultant_routes() -> Outcome {
    for t in 0..500 {
        let mut rng = trial_rng(SEED.wrapping_add(7000), t);
        let arity = rng.gen_range(1..=3usize);
        let o = standard_order(arity);
        let x = o.var(0);
        let shape = PolyShape::for_arity(arity);
        let f = random_poly(&mut rng, &o, &shape, Some(0));
        let g = random_poly(&mut rng, &o, &shape, None);
        let a = resultant_bareiss(&f, &g, &x).unwrap();
        let b = resultant_prs(&f, &g, &x).unwrap();
        ensure(a == b, || {
            format!("trial {t}: routes differ for f = {f}, g = {g}")
        })?;
        let c = resultant_modular(&f, &g, &x).unwrap();
        ensure(a == c, || {
            format!("trial {t}: modular route differs for f = {f}, g = {g}")
        })?;
        let oracle = |pt: &[BigRational]| res_oracle(&specialize(&f, pt), &specialize(&g, pt));
        check_res_at_points(&mut rng, &a, oracle, &format!("trial {t}"))?;
    }
    Ok("500 pairs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 quadratic pair identity", 5, quadratic_pair),
        ("2 product identity", 60, product_identity),
        ("3 discriminant and s-fold", 120, discriminant_and_s_fold),
        ("4 projection equivalence", 120, equivalence),
        ("5 optimum equation", 10, optimization),
        ("6 triangular containment", 120, triangular_containment),
        ("7 resultant routes", 60, resultant_routes),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            })
            .and_then(|note| {
                let elapsed = start.elapsed();
                if elapsed > Duration::from_secs(budget) {
                    Err(format!("{note}, but over budget"))
                } else {
                    Ok(note)
                }
            });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("PASS {name:28} {secs:7.2} s / {budget} s  {note}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name:28} {secs:7.2} s / {budget} s  {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
