//! Satisfiability core backing all semantic queries.
//!
//! Formulae are translated to CNF via the Tseitin encoding (one fresh
//! variable per connective node, so the clause set stays linear in the
//! formula size) and decided by a DPLL search with unit propagation.
//! Queries at desk scale involve a few dozen variables at most.

use super::{Atom, Formula};
use std::collections::BTreeMap;

/// Literals are non-zero integers: variable v is `v + 1` signed.
type Lit = i32;

struct CnfBuilder {
    clauses: Vec<Vec<Lit>>,
    num_vars: usize,
    atom_vars: BTreeMap<Atom, usize>,
}

impl CnfBuilder {
    fn new() -> Self {
        CnfBuilder {
            clauses: Vec::new(),
            num_vars: 0,
            atom_vars: BTreeMap::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.num_vars += 1;
        self.num_vars - 1
    }

    fn atom_var(&mut self, atom: &Atom) -> usize {
        if let Some(&v) = self.atom_vars.get(atom) {
            return v;
        }
        let v = self.fresh();
        self.atom_vars.insert(atom.clone(), v);
        v
    }

    fn lit(var: usize, positive: bool) -> Lit {
        let l = (var + 1) as Lit;
        if positive {
            l
        } else {
            -l
        }
    }

    /// Returns a literal equisatisfiably representing `f`.
    fn encode(&mut self, f: &Formula) -> Lit {
        match f {
            Formula::Verum => {
                let v = self.fresh();
                self.clauses.push(vec![Self::lit(v, true)]);
                Self::lit(v, true)
            }
            Formula::Falsum => {
                let v = self.fresh();
                self.clauses.push(vec![Self::lit(v, true)]);
                Self::lit(v, false)
            }
            Formula::Atom(atom) => Self::lit(self.atom_var(atom), true),
            Formula::Not(inner) => -self.encode(inner),
            Formula::And(a, b) => {
                let (la, lb) = (self.encode(a), self.encode(b));
                let v = Self::lit(self.fresh(), true);
                self.clauses.push(vec![-v, la]);
                self.clauses.push(vec![-v, lb]);
                self.clauses.push(vec![v, -la, -lb]);
                v
            }
            Formula::Or(a, b) => {
                let (la, lb) = (self.encode(a), self.encode(b));
                let v = Self::lit(self.fresh(), true);
                self.clauses.push(vec![-v, la, lb]);
                self.clauses.push(vec![v, -la]);
                self.clauses.push(vec![v, -lb]);
                v
            }
            Formula::Implies(a, b) => {
                let (la, lb) = (self.encode(a), self.encode(b));
                let v = Self::lit(self.fresh(), true);
                self.clauses.push(vec![-v, -la, lb]);
                self.clauses.push(vec![v, la]);
                self.clauses.push(vec![v, -lb]);
                v
            }
            Formula::Iff(a, b) => {
                let (la, lb) = (self.encode(a), self.encode(b));
                let v = Self::lit(self.fresh(), true);
                self.clauses.push(vec![-v, -la, lb]);
                self.clauses.push(vec![-v, la, -lb]);
                self.clauses.push(vec![v, la, lb]);
                self.clauses.push(vec![v, -la, -lb]);
                v
            }
        }
    }
}

/// Whether the conjunction of `formulas` has a model.
pub(crate) fn satisfiable(formulas: &[&Formula]) -> bool {
    let mut builder = CnfBuilder::new();
    for f in formulas {
        let root = builder.encode(f);
        builder.clauses.push(vec![root]);
    }
    let mut assignment = vec![None; builder.num_vars];
    dpll(&builder.clauses, &mut assignment)
}

fn lit_value(assignment: &[Option<bool>], lit: Lit) -> Option<bool> {
    let var = (lit.unsigned_abs() - 1) as usize;
    assignment[var].map(|v| if lit > 0 { v } else { !v })
}

/// Unit propagation to fixpoint. Returns false on conflict.
fn propagate(clauses: &[Vec<Lit>], assignment: &mut [Option<bool>]) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned: Option<Lit> = None;
            let mut satisfied = false;
            let mut open = 0;
            for &lit in clause {
                match lit_value(assignment, lit) {
                    Some(true) => {
                        satisfied = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                }
            }
            if satisfied {
                continue;
            }
            match open {
                0 => return false,
                1 => {
                    let lit = unassigned.unwrap();
                    let var = (lit.unsigned_abs() - 1) as usize;
                    assignment[var] = Some(lit > 0);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn dpll(clauses: &[Vec<Lit>], assignment: &mut [Option<bool>]) -> bool {
    if !propagate(clauses, assignment) {
        return false;
    }
    let Some(var) = assignment.iter().position(Option::is_none) else {
        return true;
    };
    for choice in [true, false] {
        let mut branch = assignment.to_vec();
        branch[var] = Some(choice);
        if dpll(clauses, &mut branch) {
            return true;
        }
    }
    false
}
