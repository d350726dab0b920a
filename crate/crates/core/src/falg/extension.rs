//! Inclusion-exclusion extension of face data to all contractible
//! subcomplexes, as integer linear forms in the face values.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::simplicial::{Collapser, Face, SubComplex};

/// Coefficients of `φ(K) = Σ_σ c_σ f(σ)`, indexed by face mask.
pub type LinearForm = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Attach {
    Ascending,
    Descending,
}

/// Computes `φ(K) := ι_!τ(Δᵖ, K)` for contractible `K` by attaching maximal
/// faces one at a time. Two attachment orders are run and must agree.
pub struct Extender {
    p: usize,
    collapser: Collapser,
    asc: HashMap<u128, LinearForm>,
    desc: HashMap<u128, LinearForm>,
}

impl Extender {
    pub fn new(p: usize) -> Self {
        Self {
            p,
            collapser: Collapser::default(),
            asc: HashMap::new(),
            desc: HashMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.p
    }

    pub fn is_contractible(&mut self, k: &SubComplex) -> bool {
        self.collapser.is_contractible(k)
    }

    /// Linear form of `φ(K)`; errors if `K` is not contractible or the two
    /// attachment orders disagree.
    pub fn form(&mut self, k: &SubComplex) -> Result<LinearForm> {
        if k.ambient() != self.p {
            return Err(Error::AmbientMismatch(k.ambient(), self.p));
        }
        if !self.collapser.is_contractible(k) {
            return Err(Error::NotContractible);
        }
        let a = self.attach(k, Attach::Ascending)?;
        let d = self.attach(k, Attach::Descending)?;
        if a != d {
            return Err(Error::AttachmentOrder);
        }
        Ok(a)
    }

    fn attach(&mut self, k: &SubComplex, order: Attach) -> Result<LinearForm> {
        let memo = match order {
            Attach::Ascending => &self.asc,
            Attach::Descending => &self.desc,
        };
        if let Some(f) = memo.get(&k.bits()) {
            return Ok(f.clone());
        }
        let mut maximal = k.maximal_faces();
        let form = if maximal.len() == 1 {
            let mut f = vec![0; 1 << (self.p + 1)];
            f[maximal[0].mask() as usize] = 1;
            f
        } else {
            if order == Attach::Descending {
                maximal.reverse();
            }
            let mut found = None;
            for (idx, &sigma) in maximal.iter().enumerate() {
                let others: Vec<Face> = maximal
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != idx)
                    .map(|(_, &f)| f)
                    .collect();
                let rest = SubComplex::generated_by(self.p, &others)?;
                let cell = SubComplex::face(self.p, sigma)?;
                let Ok(meet) = rest.intersection(&cell) else { continue };
                if self.collapser.is_contractible(&rest) && self.collapser.is_contractible(&meet) {
                    found = Some((rest, sigma, meet));
                    break;
                }
            }
            let (rest, sigma, meet) = found.ok_or(Error::NotContractible)?;
            let mut f = self.attach(&rest, order)?;
            let g = self.attach(&meet, order)?;
            for (a, b) in f.iter_mut().zip(&g) {
                *a -= b;
            }
            f[sigma.mask() as usize] += 1;
            f
        };
        let memo = match order {
            Attach::Ascending => &mut self.asc,
            Attach::Descending => &mut self.desc,
        };
        memo.insert(k.bits(), form.clone());
        Ok(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horn_is_inclusion_exclusion() {
        let mut e = Extender::new(2);
        let f = e.form(&SubComplex::horn(2, 0).unwrap()).unwrap();
        let m = |s: &str| Face::parse(s).unwrap().mask() as usize;
        let mut expect = vec![0; 8];
        expect[m("02")] = 1;
        expect[m("01")] = 1;
        expect[m("0")] = -1;
        assert_eq!(f, expect);
    }

    #[test]
    fn disconnected_input_rejected() {
        let mut e = Extender::new(1);
        let k = SubComplex::parse_faces(1, &["0", "1"]).unwrap();
        assert_eq!(e.form(&k), Err(Error::NotContractible));
    }
}
