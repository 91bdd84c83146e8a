//! Univariate polynomials over F_p (coefficients low degree first),
//! just enough for minimal polynomials and their roots.

use crate::field;
use crate::matrix::FMatrix;

pub type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &Poly) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn monic(a: Poly, p: u32) -> Poly {
    let a = trim(a);
    match a.last() {
        Some(&lc) => {
            let iv = field::inv(lc, p);
            a.into_iter().map(|c| field::mul(c, iv, p)).collect()
        }
        None => a,
    }
}

pub fn sub(a: &Poly, b: &Poly, p: u32) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| field::sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn mul(a: &Poly, b: &Poly, p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = field::add(r[i + j], field::mul(x, y, p), p);
        }
    }
    trim(r)
}

/// Remainder of `a` modulo nonzero `m`.
pub fn rem(a: &Poly, m: &Poly, p: u32) -> Poly {
    let dm = degree(m).expect("division by zero polynomial");
    let ilc = field::inv(m[dm], p);
    let mut r = trim(a.clone());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = field::mul(r[dr], ilc, p);
        for i in 0..=dm {
            let t = field::mul(c, m[i], p);
            r[dr - dm + i] = field::sub(r[dr - dm + i], t, p);
        }
        r = trim(r);
    }
    r
}

pub fn gcd(a: &Poly, b: &Poly, p: u32) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

fn powmod(base: &Poly, mut e: u64, m: &Poly, p: u32) -> Poly {
    let mut r: Poly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    trim(r)
}

pub fn eval(a: &Poly, x: u32, p: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| field::add(field::mul(acc, x, p), c, p))
}

/// Distinct roots in F_p, sorted.
pub fn roots(f: &Poly, p: u32) -> Vec<u32> {
    let f = monic(f.clone(), p);
    let Some(d) = degree(&f) else { return Vec::new() };
    if d == 0 {
        return Vec::new();
    }
    let mut out = if p <= 4096 {
        (0..p).filter(|&x| eval(&f, x, p) == 0).collect()
    } else {
        // g = gcd(f, x^p - x) is the product of the distinct linear factors
        let xp = powmod(&vec![0, 1], p as u64, &f, p);
        let g = gcd(&f, &sub(&xp, &vec![0, 1], p), p);
        let mut acc = Vec::new();
        split_linear(g, p, 0, &mut acc);
        acc
    };
    out.sort_unstable();
    out
}

fn split_linear(g: Poly, p: u32, mut shift: u32, out: &mut Vec<u32>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(field::neg(g[0], p)),
        Some(_) => loop {
            // deterministic Cantor-Zassenhaus: gcd(g, (x + a)^((p-1)/2) - 1)
            let h = powmod(&vec![shift, 1], (p as u64 - 1) / 2, &g, p);
            let h = sub(&h, &vec![1], p);
            let d = gcd(&g, &h, p);
            shift += 1;
            let dd = degree(&d).unwrap_or(0);
            if dd > 0 && dd < degree(&g).unwrap() {
                let q = div_exact(&g, &d, p);
                split_linear(d, p, shift, out);
                split_linear(q, p, shift, out);
                return;
            }
        },
    }
}

fn div_exact(a: &Poly, b: &Poly, p: u32) -> Poly {
    let db = degree(b).unwrap();
    let da = degree(a).unwrap();
    let ilc = field::inv(b[db], p);
    let mut r = a.clone();
    let mut q = vec![0u32; da - db + 1];
    for k in (0..=da - db).rev() {
        let c = field::mul(r[k + db], ilc, p);
        q[k] = c;
        for i in 0..=db {
            r[k + i] = field::sub(r[k + i], field::mul(c, b[i], p), p);
        }
    }
    trim(q)
}

/// Minimal polynomial of a square matrix, monic.
pub fn minimal_polynomial(m: &FMatrix) -> Poly {
    let p = m.modulus();
    let n = m.rows();
    let mut powers: Vec<Vec<u32>> = vec![FMatrix::identity(p, n).data().to_vec()];
    let mut cur = FMatrix::identity(p, n);
    loop {
        cur = cur.mul(m);
        let v = cur.data().to_vec();
        let basis = FMatrix::from_columns(p, n * n, &powers);
        if let Some(x) = basis.solve(&FMatrix::column(p, &v)).expect("shapes agree") {
            let mut poly: Poly = x.col(0).iter().map(|&c| field::neg(c, p)).collect();
            poly.push(1);
            return poly;
        }
        powers.push(v);
    }
}

/// If `f` is `(x - l)^k`, returns `l`.
pub fn single_root_power(f: &Poly, p: u32) -> Option<u32> {
    let f = monic(f.clone(), p);
    let k = degree(&f)?;
    if k == 0 {
        return None;
    }
    let r = roots(&f, p);
    if r.len() != 1 {
        return None;
    }
    let lin: Poly = vec![field::neg(r[0], p), 1];
    let mut pw: Poly = vec![1];
    for _ in 0..k {
        pw = mul(&pw, &lin, p);
    }
    (pw == f).then_some(r[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_small_and_large() {
        // (x-1)(x-2)(x^2+1) over F_7: x^2+1 irreducible since 7 = 3 mod 4
        let f = mul(&mul(&vec![6, 1], &vec![5, 1], 7), &vec![1, 0, 1], 7);
        assert_eq!(roots(&f, 7), vec![1, 2]);
        let p = 32003;
        let f = mul(&mul(&vec![p - 5, 1], &vec![p - 17, 1], p), &vec![p - 5, 1], p);
        assert_eq!(roots(&f, p), vec![5, 17]);
        // x^2 + 1 has roots mod 32003? 32003 = 3 mod 4, so none
        assert!(roots(&vec![1, 0, 1], p).is_empty());
    }

    #[test]
    fn minpoly() {
        let p = 101;
        let m = FMatrix::from_rows(p, &[[2, 1, 0], [0, 2, 0], [0, 0, 2]]);
        assert_eq!(minimal_polynomial(&m), vec![4, 97, 1]);
        assert_eq!(single_root_power(&minimal_polynomial(&m), p), Some(2));
        let d = FMatrix::from_rows(p, &[[1, 0], [0, 3]]);
        assert_eq!(single_root_power(&minimal_polynomial(&d), p), None);
    }
}
