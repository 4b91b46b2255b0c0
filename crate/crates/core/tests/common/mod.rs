//! Brute-force oracles shared by the integration tests. Everything here recomputes from
//! the color matrix with naive loops, independent of the library's bitset products.
#![allow(dead_code)]

use jordan_schemes::Rainbow;

pub type Dense = Vec<Vec<i64>>;

pub fn indicator(x: &Rainbow, colors: &[usize]) -> Dense {
    let n = x.order();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| i64::from(colors.contains(&x.color(a, b))))
                .collect()
        })
        .collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale(a: &Dense, k: i64) -> Dense {
    a.iter().map(|r| r.iter().map(|x| x * k).collect()).collect()
}

pub fn zeros(n: usize) -> Dense {
    vec![vec![0; n]; n]
}

/// `AB + BA`.
pub fn jordan2(a: &Dense, b: &Dense) -> Dense {
    add(&mul(a, b), &mul(b, a))
}

/// Whether `m` is constant on every color class of `x`.
pub fn constant_on_classes(x: &Rainbow, m: &Dense) -> bool {
    let n = x.order();
    let mut seen: Vec<Option<i64>> = vec![None; x.rank()];
    for a in 0..n {
        for b in 0..n {
            let slot = &mut seen[x.color(a, b)];
            match *slot {
                None => *slot = Some(m[a][b]),
                Some(v) if v != m[a][b] => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// Direct definition: `|{γ : c(α,γ)=C, c(γ,β)=D}|` constant on each class, all `(C, D)`.
pub fn brute_is_cc(x: &Rainbow) -> bool {
    let basis: Vec<Dense> = (0..x.rank()).map(|c| indicator(x, &[c])).collect();
    basis
        .iter()
        .all(|a| basis.iter().all(|b| constant_on_classes(x, &mul(a, b))))
}

/// Symmetrized count constant on classes, all unordered `(C, D)`.
pub fn brute_is_jc(x: &Rainbow) -> bool {
    let basis: Vec<Dense> = (0..x.rank()).map(|c| indicator(x, &[c])).collect();
    (0..basis.len()).all(|c| {
        (c..basis.len()).all(|d| constant_on_classes(x, &jordan2(&basis[c], &basis[d])))
    })
}

/// Thin scheme of `S₃`: points are permutations of `{0,1,2}`, `color(α, β) = α⁻¹β`.
pub fn thin_s3() -> Rainbow {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let inverse = |p: [usize; 3]| {
        let mut q = [0; 3];
        for (i, &v) in p.iter().enumerate() {
            q[v] = i;
        }
        q
    };
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    Rainbow::from_fn(6, |a, b| {
        let g = compose(inverse(perms[a]), perms[b]);
        perms.iter().position(|&p| p == g).unwrap()
    })
    .unwrap()
}

const P: u64 = 1_000_000_007;

/// Dimension over `F_p` of the algebra generated by the given matrices: plain Gaussian
/// elimination modulo a large prime on flattened matrices, closing under products.
pub fn assoc_dimension_mod_p(gens: &[Dense]) -> usize {
    fn reduce(basis: &[(usize, Vec<u64>)], v: &mut [u64]) {
        for (pivot, row) in basis {
            let f = v[*pivot];
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + P - f * r % P) % P;
                }
            }
        }
    }
    fn inv(a: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a, P - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    }
    let flat = |m: &Dense| -> Vec<u64> {
        m.iter()
            .flatten()
            .map(|&x| x.rem_euclid(P as i64) as u64)
            .collect()
    };
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut elems: Vec<Dense> = Vec::new();
    let push = |m: Dense, basis: &mut Vec<(usize, Vec<u64>)>, elems: &mut Vec<Dense>| {
        let mut v = flat(&m);
        reduce(basis, &mut v);
        if let Some(p) = v.iter().position(|&x| x != 0) {
            let s = inv(v[p]);
            for x in v.iter_mut() {
                *x = *x * s % P;
            }
            // keep earlier rows reduced at the new pivot
            for (_, row) in basis.iter_mut() {
                let f = row[p];
                if f != 0 {
                    for (x, r) in row.iter_mut().zip(&v) {
                        *x = (*x + P - f * r % P) % P;
                    }
                }
            }
            basis.push((p, v));
            elems.push(m);
        }
    };
    for g in gens {
        push(g.clone(), &mut basis, &mut elems);
    }
    let mut i = 0;
    while i < elems.len() {
        for j in 0..=i {
            let (a, b) = (elems[i].clone(), elems[j].clone());
            push(mul(&a, &b), &mut basis, &mut elems);
            push(mul(&b, &a), &mut basis, &mut elems);
        }
        i += 1;
    }
    basis.len()
}
