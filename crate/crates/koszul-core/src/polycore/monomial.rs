//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// Power product in a fixed number of variables. Total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial { exps: vec![0; n_vars], deg: 0 }
    }

    pub fn var(i: usize, n_vars: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Extends the exponent vector with `extra` trailing zero entries.
    pub fn extend_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps, deg: self.deg }
    }
}

/// Term order on monomials. `Block { first }` compares the leading `first`
/// variables by grevlex before the rest, so it eliminates that block.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block { first: usize },
}

fn grevlex_cmp(a: &[u32], b: &[u32], dega: u32, degb: u32) -> Ordering {
    match dega.cmp(&degb) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex_cmp(a.exps(), b.exps(), a.deg(), b.deg()),
            MonomialOrder::Lex => {
                for (x, y) in a.exps().iter().zip(b.exps()) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { first } => {
                let (a1, a2) = a.exps().split_at(first.min(a.n_vars()));
                let (b1, b2) = b.exps().split_at(first.min(b.n_vars()));
                let d = |s: &[u32]| s.iter().sum::<u32>();
                match grevlex_cmp(a1, b1, d(a1), d(b1)) {
                    Ordering::Equal => grevlex_cmp(a2, b2, d(a2), d(b2)),
                    ord => ord,
                }
            }
        }
    }

    /// True when larger total degree implies a larger monomial.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

/// All monomials of total degree `d` in `n` variables, in lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(out, cur, i + 1, left - e);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(&mut out, &mut cur, 0, d);
    out
}

/// All monomials of total degree at most `d`, grouped by ascending degree.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_textbook_order() {
        // x^2 > xy > y^2 > xz > yz > z^2 under grevlex with x > y > z.
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(MonomialOrder::GrevLex.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        // grevlex vs lex disagree on xz^2 vs y^3? lex: x>y so xz^2 > y^3; grevlex: same degree,
        // rightmost difference is z: xz^2 has more z, so xz^2 < y^3.
        assert_eq!(MonomialOrder::GrevLex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_vars() {
        let ord = MonomialOrder::Block { first: 1 };
        // Any monomial containing t (var 0) beats any t-free monomial.
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        // t-free monomials compare by grevlex on the tail.
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15); // C(6,2)
        assert_eq!(monomials_up_to(2, 3).len(), 10);
        let all = monomials_of_degree(3, 2);
        assert!(all.windows(2).all(|w| w[0] != w[1]));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[1, 1, 1]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), m(&[1, 2, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(m(&[1, 1, 0]).div_into(&a), m(&[0, 1, 0]));
    }
}
