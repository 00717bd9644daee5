use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::tableau::Tableau;
use crate::error::{Error, Result};

/// Integer polynomial in `x_1, ..., x_n` keyed by exponent vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

/// One monomial as serialized: `{"weight":[2,0,2,0],"coeff":1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub weight: Vec<u32>,
    pub coeff: i64,
}

impl WeightPolynomial {
    pub fn zero(n: usize) -> Self {
        WeightPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, weight: Vec<u32>, coeff: i64) -> Result<()> {
        if weight.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "weight of length {} in a polynomial in {} variables",
                weight.len(),
                self.n
            )));
        }
        match self.terms.entry(weight) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if coeff != 0 {
                    v.insert(coeff);
                }
            }
        }
        Ok(())
    }

    pub fn coefficient(&self, weight: &[u32]) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order of exponent vectors, so that
    /// `x_1^2 x_3^2` precedes `x_1 x_2 x_3^2`.
    pub fn terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(w, &c)| Term { weight: w.clone(), coeff: c })
            .collect()
    }

    pub fn from_terms(n: usize, terms: &[Term]) -> Result<Self> {
        let mut p = Self::zero(n);
        for t in terms {
            p.add_term(t.weight.clone(), t.coeff)?;
        }
        Ok(p)
    }

    pub fn total_coefficient(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Serialize for WeightPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms())
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, term) in self.terms().iter().enumerate() {
            let c = term.coeff;
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let monomial: Vec<String> = term
                .weight
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            let abs = c.abs();
            match (abs, monomial.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (1, false) => write!(f, "{}", monomial.join("*"))?,
                _ => write!(f, "{abs}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

/// `Σ_{T ∈ set} x^{wt(T)}`.
pub fn character_of_set<'a>(n: usize, set: impl IntoIterator<Item = &'a Tableau>) -> Result<WeightPolynomial> {
    let mut p = WeightPolynomial::zero(n);
    for t in set {
        p.add_term(t.weight(), 1)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::tableau::make_extremal;
    use crate::subsets::KSubset;

    #[test]
    fn single_extremal_monomial() {
        let i = KSubset::new(4, [1, 3]).unwrap();
        let t = make_extremal(&i, 2).unwrap();
        let p = character_of_set(4, [&t]).unwrap();
        assert_eq!(p.terms(), vec![Term { weight: vec![2, 0, 2, 0], coeff: 1 }]);
        assert_eq!(p.to_string(), "x1^2*x3^2");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = WeightPolynomial::zero(2);
        p.add_term(vec![1, 0], 3).unwrap();
        p.add_term(vec![0, 1], 1).unwrap();
        p.add_term(vec![1, 0], -3).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "x2");
        assert!(p.add_term(vec![1], 1).is_err());
    }

    #[test]
    fn json_shape() {
        let mut p = WeightPolynomial::zero(2);
        p.add_term(vec![2, 0], 1).unwrap();
        p.add_term(vec![1, 1], 2).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"[{"weight":[2,0],"coeff":1},{"weight":[1,1],"coeff":2}]"#
        );
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2");
    }
}
