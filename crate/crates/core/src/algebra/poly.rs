use std::fmt;

use super::field::Fp;
use super::lin::Lin;

/// Exponent vector of a monomial `x_1^{e_1} ... x_n^{e_n}`; dense, fixed length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.0[i] = e;
        m
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// All monomials in `nvars` variables of total degree `deg`, in lexicographic order.
    pub fn all_of_degree(nvars: usize, deg: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; nvars];
        fn rec(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if n == 0 {
                if left == 0 {
                    out.push(Monomial(Vec::new()));
                }
                return;
            }
            if i == n - 1 {
                cur[i] = left as u16;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, deg, &mut cur, &mut out);
        out
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("")
        }
    }
}

/// Sparse polynomial: element of S(V) = F_p[x_1..x_n].
pub type Poly = Lin<Monomial>;

impl Lin<Monomial> {
    pub fn constant(nvars: usize, c: u32) -> Poly {
        Lin::single(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial) -> Poly {
        Lin::single(m, 1)
    }

    pub fn mul(&self, other: &Poly, fp: &Fp) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(a.mul(b), fp.mul(ca, cb), fp);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, fp: &Fp) -> Poly {
        self.map_keys(|k| k.mul(m), fp)
    }

    /// `Some(d)` when every term has total degree `d`; `None` for the zero polynomial or
    /// inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn display_with(&self, names: &[String], fp: &Fp) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.iter() {
            let c = fp.to_signed(c);
            let mono = k.display_with(names);
            let body = match (c.abs(), mono.as_str()) {
                (1, "1") => "1".to_string(),
                (1, m) => m.to_string(),
                (a, "1") => a.to_string(),
                (a, m) => format!("{a}{m}"),
            };
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        s
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.0.len()).map(|i| format!("x{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(2, 2).len(), 3);
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial(vec![0, 0])]);
    }

    #[test]
    fn product_cancels_in_char_p() {
        let fp = Fp::new(2).unwrap();
        let v = Poly::monomial(Monomial::var(2, 0));
        let w = Poly::monomial(Monomial::var(2, 1));
        let mut s = v.clone();
        s.add_scaled(&w, 1, &fp);
        // (v+w)^2 = v^2 + w^2 in characteristic 2
        let sq = s.mul(&s, &fp);
        assert_eq!(sq.len(), 2);
        assert_eq!(sq.homogeneous_degree(), Some(2));
    }
}
