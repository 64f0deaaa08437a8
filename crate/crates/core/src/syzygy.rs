//! The syzygy operator `Syz`, its matrix description and the dihedral
//! action generated together with the dual.
//!
//! `Syz(Delta_I)` is the set of elements with more than one presentation
//! `i + gamma`. On path matrices it rotates the top row one step to the
//! left and keeps the bottom row; the dual reverses the columns and shifts
//! the bottom row by one.

use crate::error::{Error, Result};
use crate::pathmatrix::{lean_to_matrix, matrix_equiv, matrix_to_lean, PathMatrix};
use crate::semimodule::{LeanSet, Semimodule};

/// A lean set together with the (unnormalized) generators of its syzygy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalCouple {
    pub lean: LeanSet,
    pub j: Vec<i64>,
}

/// `j_0 = (beta - a_1) alpha`, `j_k = alpha beta - a_{k+1} alpha - b_k beta`,
/// `j_n = (alpha - b_n) beta`.
pub fn syzygy_generators(lean: &LeanSet) -> Result<FundamentalCouple> {
    let gamma = lean.gamma();
    let (alpha, beta) = (gamma.alpha(), gamma.beta());
    let c = lean.coords();
    let n = c.len();
    if n == 0 {
        return Err(Error::TooFewGenerators { needed: 2, got: 1 });
    }
    let mut j = Vec::with_capacity(n + 1);
    j.push((beta - c[0].a) * alpha);
    for k in 0..n - 1 {
        j.push(gamma.product() - c[k + 1].a * alpha - c[k].b * beta);
    }
    j.push((alpha - c[n - 1].b) * beta);
    Ok(FundamentalCouple {
        lean: lean.clone(),
        j,
    })
}

/// `Syz` of a class as a shifted semimodule. `Syz(Gamma)` is taken to be
/// `Gamma` itself.
pub fn syzygy(lean: &LeanSet) -> Semimodule {
    match syzygy_generators(lean) {
        Ok(fc) => Semimodule::generated_by(lean.gamma(), &fc.j).expect("nonempty"),
        Err(_) => Semimodule::from(lean.clone()),
    }
}

/// Scans the union of pairwise intersections `(Gamma + i) ∩ (Gamma + i')`.
pub fn syzygy_oracle(lean: &LeanSet) -> Result<Semimodule> {
    if lean.len() < 2 {
        return Err(Error::TooFewGenerators {
            needed: 2,
            got: lean.len(),
        });
    }
    let gamma = lean.gamma();
    let gens = lean.gens();
    // Both translates are full from max(i, i') + conductor on.
    let top = lean.max_gen() + gamma.conductor();
    Ok(Semimodule::from_window(
        gamma,
        0,
        top + gamma.alpha(),
        |x| gens.iter().filter(|&&i| gamma.contains(x - i)).count() >= 2,
    ))
}

pub fn syzygy_matrix(m: &PathMatrix) -> PathMatrix {
    let mut top = m.top().to_vec();
    top.rotate_left(1);
    PathMatrix::new(top, m.bottom().to_vec()).expect("permuted entries stay valid")
}

pub fn syzygy_matrix_inverse(m: &PathMatrix) -> PathMatrix {
    let mut top = m.top().to_vec();
    top.rotate_right(1);
    PathMatrix::new(top, m.bottom().to_vec()).expect("permuted entries stay valid")
}

/// `(y_0..y_n / x_0..x_n) -> (y_n..y_0 / x_{n-1}..x_0, x_n)`.
pub fn dual_matrix(m: &PathMatrix) -> PathMatrix {
    let top: Vec<i64> = m.top().iter().rev().copied().collect();
    let n = m.columns() - 1;
    let mut bottom: Vec<i64> = m.bottom()[..n].iter().rev().copied().collect();
    bottom.push(m.bottom()[n]);
    PathMatrix::new(top, bottom).expect("permuted entries stay valid")
}

/// One element of the dihedral group generated by `Syz` and the dual:
/// `dual^reflect ∘ Syz^rotation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralElement {
    pub rotation: usize,
    pub reflect: bool,
}

impl DihedralElement {
    pub fn apply(&self, m: &PathMatrix) -> PathMatrix {
        let mut out = m.clone();
        for _ in 0..self.rotation {
            out = syzygy_matrix(&out);
        }
        if self.reflect {
            out = dual_matrix(&out);
        }
        out
    }

    pub fn label(&self) -> String {
        match (self.rotation, self.reflect) {
            (0, false) => "id".to_string(),
            (k, false) => format!("Syz^{k}"),
            (0, true) => "dual".to_string(),
            (k, true) => format!("dual.Syz^{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitEntry {
    pub element: DihedralElement,
    pub lean: LeanSet,
}

/// The orbit listed as `Syz^k` then `dual ∘ Syz^k` for `k = 0..|I|`,
/// without removing repeats.
pub fn dihedral_orbit(lean: &LeanSet) -> Result<Vec<OrbitEntry>> {
    let m = lean_to_matrix(lean);
    let order = m.columns();
    let mut out = Vec::with_capacity(2 * order);
    for reflect in [false, true] {
        for rotation in 0..order {
            let element = DihedralElement { rotation, reflect };
            let (lean, _) = matrix_to_lean(&element.apply(&m))?;
            out.push(OrbitEntry { element, lean });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralClassReport {
    pub lean: LeanSet,
    /// `Syz^m ≅ id`.
    pub syz_power_identity: bool,
    /// `dual ∘ dual ≅ id`.
    pub dual_involution: bool,
    /// `dual ∘ Syz ∘ dual ≅ Syz^-1`.
    pub conjugation: bool,
    /// Least `k >= 1` with `Syz^k ≅ id` on this class.
    pub exact_period: usize,
}

impl DihedralClassReport {
    pub fn passed(&self) -> bool {
        self.syz_power_identity && self.dual_involution && self.conjugation
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralReport {
    pub generator_count: usize,
    pub classes: Vec<DihedralClassReport>,
    /// For every `0 < k < m` some class is moved by `Syz^k`.
    pub faithful: bool,
}

impl DihedralReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(DihedralClassReport::passed)
    }
}

pub fn dihedral_check_class(lean: &LeanSet) -> DihedralClassReport {
    let m = lean_to_matrix(lean);
    let order = m.columns();
    let mut power = m.clone();
    let mut exact_period = 0;
    for k in 1..=order {
        power = syzygy_matrix(&power);
        if exact_period == 0 && matrix_equiv(&power, &m) {
            exact_period = k;
        }
    }
    let syz_power_identity = matrix_equiv(&power, &m);
    let dual_involution = matrix_equiv(&dual_matrix(&dual_matrix(&m)), &m);
    let conjugation = matrix_equiv(
        &dual_matrix(&syzygy_matrix(&dual_matrix(&m))),
        &syzygy_matrix_inverse(&m),
    );
    DihedralClassReport {
        lean: lean.clone(),
        syz_power_identity,
        dual_involution,
        conjugation,
        exact_period,
    }
}

/// Checks the dihedral relations on every class with exactly
/// `generator_count` generators.
pub fn dihedral_check(
    classes: impl IntoIterator<Item = LeanSet>,
    generator_count: usize,
) -> Result<DihedralReport> {
    if generator_count < 3 {
        return Err(Error::TooFewGenerators {
            needed: 3,
            got: generator_count,
        });
    }
    let classes: Vec<DihedralClassReport> = classes
        .into_iter()
        .filter(|l| l.len() == generator_count)
        .map(|l| dihedral_check_class(&l))
        .collect();
    let faithful = !classes.is_empty()
        && (1..generator_count).all(|k| classes.iter().any(|c| k % c.exact_period != 0));
    Ok(DihedralReport {
        generator_count,
        classes,
        faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::dual;
    use crate::pathmatrix::enumerate_classes;
    use crate::semigroup::NumericalSemigroup;
    use crate::semimodule::normalize;

    fn g(alpha: i64, beta: i64) -> NumericalSemigroup {
        NumericalSemigroup::new(alpha, beta).unwrap()
    }

    fn worked() -> LeanSet {
        normalize(g(5, 7), &[0, 9, 6, 8]).unwrap().0
    }

    fn m(top: &[i64], bottom: &[i64]) -> PathMatrix {
        PathMatrix::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn generators_of_worked_example() {
        let fc = syzygy_generators(&worked()).unwrap();
        assert_eq!(fc.j, vec![15, 13, 16, 14]);
        let mirrored: Vec<i64> = fc.j.iter().map(|j| 35 - j).collect();
        assert_eq!(mirrored, dual(&worked()).raw_generators);
    }

    #[test]
    fn generators_of_two_three() {
        let lean = LeanSet::new(g(2, 3), vec![0, 1]).unwrap();
        assert_eq!(syzygy_generators(&lean).unwrap().j, vec![4, 3]);
        let s = syzygy_oracle(&lean).unwrap();
        assert_eq!(s.lean.gens(), &[0, 1]);
        assert_eq!(s.shift, 3);
    }

    #[test]
    fn trivial_class_has_no_syzygy_generators() {
        let t = LeanSet::trivial(g(5, 7));
        assert!(syzygy_generators(&t).is_err());
        assert!(syzygy_oracle(&t).is_err());
        assert_eq!(syzygy(&t), Semimodule::from(t));
    }

    #[test]
    fn oracle_of_worked_example() {
        let s = syzygy_oracle(&worked()).unwrap();
        assert_eq!(s.lean.sorted_gens(), vec![0, 1, 2, 3]);
        assert_eq!(s.shift, 13);
        assert_eq!(s, syzygy(&worked()));
    }

    #[test]
    fn matrix_rules() {
        let a = m(&[2, 1, 1, 1], &[1, 2, 1, 3]);
        let shifted = m(&[1, 1, 1, 2], &[1, 2, 1, 3]);
        assert_eq!(syzygy_matrix(&a), shifted);
        assert_eq!(dual_matrix(&a), shifted);
        assert_eq!(syzygy_matrix_inverse(&shifted), a);
        let single = m(&[5], &[7]);
        assert_eq!(syzygy_matrix(&single), single);
        assert_eq!(dual_matrix(&single), single);
        assert_eq!(
            matrix_to_lean(&shifted).unwrap().0.sorted_gens(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn dual_matrix_is_involution_on_four_five() {
        for lean in enumerate_classes(g(4, 5)) {
            let mat = lean_to_matrix(&lean);
            assert!(matrix_equiv(&dual_matrix(&dual_matrix(&mat)), &mat));
        }
    }

    #[test]
    fn syz_fourth_power_of_worked_example() {
        let mut mat = lean_to_matrix(&worked());
        for _ in 0..4 {
            mat = syzygy_matrix(&mat);
        }
        assert_eq!(matrix_to_lean(&mat).unwrap().0, worked());
        let report = dihedral_check_class(&worked());
        assert!(report.passed());
        assert_eq!(report.exact_period, 4);
    }

    #[test]
    fn orbit_has_two_entries_per_generator() {
        let orbit = dihedral_orbit(&worked()).unwrap();
        assert_eq!(orbit.len(), 8);
        assert_eq!(orbit[0].lean, worked());
        assert_eq!(orbit[4].lean, dual(&worked()).class);
    }

    #[test]
    fn dihedral_check_needs_three_generators() {
        assert!(dihedral_check(enumerate_classes(g(4, 5)), 2).is_err());
        let r = dihedral_check(enumerate_classes(g(4, 5)), 3).unwrap();
        assert!(r.passed() && r.faithful && !r.classes.is_empty());
    }
}
