//! Structure-constant presentations of the five algebra kinds, their axiom and
//! bimodule validators, and the induced total structures.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::linalg::{vec_add, vec_add_scaled, vec_is_zero, vec_sub, vec_zero};
use crate::scalar::Scalar;
use crate::Error;

/// Structure-constant table: `table[i][j][k]` is the coefficient of basis `k`
/// in the product of basis `i` and basis `j`.
pub type Table = Vec<Vec<Vec<Scalar>>>;

/// The five algebra kinds the engine understands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Associative,
    Perm,
    Lie,
    PreLie,
    Dendriform,
}

impl Kind {
    /// Returns the lowercase name used in file formats and reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Associative => "associative",
            Kind::Perm => "perm",
            Kind::Lie => "lie",
            Kind::PreLie => "prelie",
            Kind::Dendriform => "dendriform",
        }
    }

    /// Parses a kind name; returns `None` for unknown names.
    pub fn parse(text: &str) -> Option<Kind> {
        match text {
            "associative" => Some(Kind::Associative),
            "perm" => Some(Kind::Perm),
            "lie" => Some(Kind::Lie),
            "prelie" => Some(Kind::PreLie),
            "dendriform" => Some(Kind::Dendriform),
            _ => None,
        }
    }
}

/// Product tables of a presentation: one bilinear table, or a `prec`/`succ` pair.
#[derive(Clone, Debug)]
pub enum Tables {
    Single(Table),
    Split { prec: Table, succ: Table },
}

/// A finite-dimensional algebra of one of the five kinds, given by structure constants.
#[derive(Clone, Debug)]
pub struct StructurePresentation {
    pub kind: Kind,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub tables: Tables,
}

/// Returns an all-zero table with the given axis lengths.
pub fn zero_table(first: usize, second: usize, out: usize) -> Table {
    vec![vec![vec_zero(out); second]; first]
}

/// Returns basis labels `prefix1 .. prefixN`.
pub fn basis_labels(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}

fn table_shape_ok(table: &Table, first: usize, second: usize, out: usize) -> bool {
    table.len() == first
        && table.iter().all(|a| a.len() == second && a.iter().all(|b| b.len() == out))
}

impl StructurePresentation {
    /// Builds a single-table presentation; rejects the dendriform kind and bad shapes.
    pub fn single(kind: Kind, basis_names: Vec<String>, table: Table) -> Result<Self, Error> {
        if kind == Kind::Dendriform {
            return Err(Error::WrongKind);
        }
        let dim = basis_names.len();
        if !table_shape_ok(&table, dim, dim, dim) {
            return Err(Error::ShapeMismatch);
        }
        Ok(StructurePresentation { kind, dim, basis_names, tables: Tables::Single(table) })
    }

    /// Builds a dendriform presentation from its `prec` and `succ` tables.
    pub fn dendriform(basis_names: Vec<String>, prec: Table, succ: Table) -> Result<Self, Error> {
        let dim = basis_names.len();
        if !table_shape_ok(&prec, dim, dim, dim) || !table_shape_ok(&succ, dim, dim, dim) {
            return Err(Error::ShapeMismatch);
        }
        Ok(StructurePresentation {
            kind: Kind::Dendriform,
            dim,
            basis_names,
            tables: Tables::Split { prec, succ },
        })
    }

    /// Returns the single product table; errors for dendriform presentations.
    pub fn table(&self) -> Result<&Table, Error> {
        match &self.tables {
            Tables::Single(t) => Ok(t),
            Tables::Split { .. } => Err(Error::WrongKind),
        }
    }

    /// Returns the `(prec, succ)` table pair; errors for single-table presentations.
    pub fn prec_succ(&self) -> Result<(&Table, &Table), Error> {
        match &self.tables {
            Tables::Split { prec, succ } => Ok((prec, succ)),
            Tables::Single(_) => Err(Error::WrongKind),
        }
    }
}

/// Evaluates `x · y` under a bilinear table whose axes match `x` and `y`.
pub fn bilinear(table: &Table, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(x.len(), table.len(), "first factor length must match table");
    let out_dim = table.first().and_then(|a| a.first()).map_or(0, |v| v.len());
    let mut out = vec_zero(out_dim);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        assert_eq!(y.len(), table[i].len(), "second factor length must match table");
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let coef = xi * yj;
            vec_add_scaled(&mut out, &coef, &table[i][j]);
        }
    }
    out
}

/// Evaluates `e_i · y` under a bilinear table (basis element times vector).
pub fn apply_left(table: &Table, i: usize, y: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(y.len(), table[i].len(), "second factor length must match table");
    let out_dim = table[i].first().map_or(0, |v| v.len());
    let mut out = vec_zero(out_dim);
    for (j, yj) in y.iter().enumerate() {
        vec_add_scaled(&mut out, yj, &table[i][j]);
    }
    out
}

/// Evaluates `x · e_j` under a bilinear table (vector times basis element).
pub fn apply_right(table: &Table, x: &[Scalar], j: usize) -> Vec<Scalar> {
    assert_eq!(x.len(), table.len(), "first factor length must match table");
    let out_dim = table.first().map_or(0, |a| a[j].len());
    let mut out = vec_zero(out_dim);
    for (i, xi) in x.iter().enumerate() {
        vec_add_scaled(&mut out, xi, &table[i][j]);
    }
    out
}

/// One violated identity instance, with the basis tuple and the exact residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub at: Vec<usize>,
    pub residual: Vec<Scalar>,
}

/// All violations found by a validator, in deterministic tuple-major order.
#[derive(Clone, Debug, Default)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    /// Returns true when no identity was violated.
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, identity: &'static str, at: &[usize], residual: Vec<Scalar>) {
        if !vec_is_zero(&residual) {
            self.violations.push(Violation { identity, at: at.to_vec(), residual });
        }
    }
}

/// Checks every defining identity of the presentation's kind on all basis tuples.
pub fn validate_presentation(p: &StructurePresentation) -> Result<ViolationReport, Error> {
    let d = p.dim;
    let mut report = ViolationReport::default();
    match (p.kind, &p.tables) {
        (Kind::Associative, Tables::Single(t)) => {
            if !table_shape_ok(t, d, d, d) {
                return Err(Error::ShapeMismatch);
            }
            for_triples(d, |i, j, k| {
                report.check("(xy)z = x(yz)", &[i, j, k], associator(t, t, i, j, k));
            });
        }
        (Kind::Perm, Tables::Single(t)) => {
            if !table_shape_ok(t, d, d, d) {
                return Err(Error::ShapeMismatch);
            }
            for_triples(d, |i, j, k| {
                report.check("(xy)z = x(yz)", &[i, j, k], associator(t, t, i, j, k));
                let right_comm = vec_sub(&apply_left(t, i, &t[j][k]), &apply_left(t, i, &t[k][j]));
                report.check("x(yz) = x(zy)", &[i, j, k], right_comm);
            });
        }
        (Kind::Lie, Tables::Single(t)) => {
            if !table_shape_ok(t, d, d, d) {
                return Err(Error::ShapeMismatch);
            }
            for i in 0..d {
                for j in 0..d {
                    report.check("[x,y] = -[y,x]", &[i, j], vec_add(&t[i][j], &t[j][i]));
                }
            }
            for_triples(d, |i, j, k| {
                let mut jac = apply_right(t, &t[i][j], k);
                vec_add_scaled(&mut jac, &Scalar::from_integer(1.into()), &apply_right(t, &t[j][k], i));
                vec_add_scaled(&mut jac, &Scalar::from_integer(1.into()), &apply_right(t, &t[k][i], j));
                report.check("[[x,y],z] + [[y,z],x] + [[z,x],y] = 0", &[i, j, k], jac);
            });
        }
        (Kind::PreLie, Tables::Single(t)) => {
            if !table_shape_ok(t, d, d, d) {
                return Err(Error::ShapeMismatch);
            }
            for_triples(d, |i, j, k| {
                let lhs = associator(t, t, i, j, k);
                let rhs = associator(t, t, i, k, j);
                report.check("(xy)z - x(yz) = (xz)y - x(zy)", &[i, j, k], vec_sub(&lhs, &rhs));
            });
        }
        (Kind::Dendriform, Tables::Split { prec, succ }) => {
            if !table_shape_ok(prec, d, d, d) || !table_shape_ok(succ, d, d, d) {
                return Err(Error::ShapeMismatch);
            }
            for_triples(d, |i, j, k| {
                let lhs1 = apply_right(prec, &prec[i][j], k);
                let rhs1 = apply_left(prec, i, &vec_add(&prec[j][k], &succ[j][k]));
                report.check("(x<y)<z = x<(y<z) + x<(y>z)", &[i, j, k], vec_sub(&lhs1, &rhs1));

                let lhs2 = apply_right(prec, &succ[i][j], k);
                let rhs2 = apply_left(succ, i, &prec[j][k]);
                report.check("(x>y)<z = x>(y<z)", &[i, j, k], vec_sub(&lhs2, &rhs2));

                let lhs3 = apply_left(succ, i, &succ[j][k]);
                let rhs3 = apply_right(succ, &vec_add(&prec[i][j], &succ[i][j]), k);
                report.check("x>(y>z) = (x<y)>z + (x>y)>z", &[i, j, k], vec_sub(&lhs3, &rhs3));
            });
        }
        _ => return Err(Error::ShapeMismatch),
    }
    Ok(report)
}

/// `(e_i e_j) e_k - e_i (e_j e_k)` where the outer products use `outer` and inner use `inner`.
fn associator(outer: &Table, inner: &Table, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    vec_sub(&apply_right(outer, &inner[i][j], k), &apply_left(outer, i, &inner[j][k]))
}

fn for_triples(d: usize, mut body: impl FnMut(usize, usize, usize)) {
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                body(i, j, k);
            }
        }
    }
}

/// Action tables of a bimodule, shaped per algebra kind.
///
/// Left tables are indexed `[algebra][module][module]`, right tables
/// `[module][algebra][module]`.
#[derive(Clone, Debug)]
pub enum Actions {
    /// Associative, Perm, and pre-Lie bimodules carry a left and a right action.
    LeftRight { left: Table, right: Table },
    /// Dendriform bimodules carry the four half-product actions.
    Dendriform { lprec: Table, lsucc: Table, rprec: Table, rsucc: Table },
    /// Lie modules carry the single action `x · m`.
    Single { action: Table },
}

/// A module over a presentation, given by action structure constants.
#[derive(Clone, Debug)]
pub struct BimoduleData {
    pub over: StructurePresentation,
    pub module_dim: usize,
    pub actions: Actions,
}

impl BimoduleData {
    /// Builds a bimodule after checking action-table shapes against the kind.
    pub fn new(
        over: StructurePresentation,
        module_dim: usize,
        actions: Actions,
    ) -> Result<Self, Error> {
        let b = BimoduleData { over, module_dim, actions };
        b.shape_check()?;
        Ok(b)
    }

    /// Builds the regular bimodule, whose actions are the algebra's own products.
    pub fn regular(p: &StructurePresentation) -> Self {
        let actions = match (&p.kind, &p.tables) {
            (Kind::Lie, Tables::Single(t)) => Actions::Single { action: t.clone() },
            (_, Tables::Single(t)) => Actions::LeftRight { left: t.clone(), right: t.clone() },
            (_, Tables::Split { prec, succ }) => Actions::Dendriform {
                lprec: prec.clone(),
                lsucc: succ.clone(),
                rprec: prec.clone(),
                rsucc: succ.clone(),
            },
        };
        BimoduleData { over: p.clone(), module_dim: p.dim, actions }
    }

    /// Builds the module with all actions zero.
    pub fn zero_actions(p: &StructurePresentation, module_dim: usize) -> Self {
        let l = zero_table(p.dim, module_dim, module_dim);
        let r = zero_table(module_dim, p.dim, module_dim);
        let actions = match p.kind {
            Kind::Lie => Actions::Single { action: l },
            Kind::Dendriform => {
                Actions::Dendriform { lprec: l.clone(), lsucc: l, rprec: r.clone(), rsucc: r }
            }
            _ => Actions::LeftRight { left: l, right: r },
        };
        BimoduleData { over: p.clone(), module_dim, actions }
    }

    fn shape_check(&self) -> Result<(), Error> {
        let (a, m) = (self.over.dim, self.module_dim);
        let ok = match (&self.over.kind, &self.actions) {
            (Kind::Lie, Actions::Single { action }) => table_shape_ok(action, a, m, m),
            (Kind::Associative | Kind::Perm | Kind::PreLie, Actions::LeftRight { left, right }) => {
                table_shape_ok(left, a, m, m) && table_shape_ok(right, m, a, m)
            }
            (Kind::Dendriform, Actions::Dendriform { lprec, lsucc, rprec, rsucc }) => {
                table_shape_ok(lprec, a, m, m)
                    && table_shape_ok(lsucc, a, m, m)
                    && table_shape_ok(rprec, m, a, m)
                    && table_shape_ok(rsucc, m, a, m)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    /// Returns the left action table; errors for dendriform and Lie modules.
    pub fn left_table(&self) -> Result<&Table, Error> {
        match &self.actions {
            Actions::LeftRight { left, .. } => Ok(left),
            _ => Err(Error::WrongKind),
        }
    }

    /// Returns the right action table; errors for dendriform and Lie modules.
    pub fn right_table(&self) -> Result<&Table, Error> {
        match &self.actions {
            Actions::LeftRight { right, .. } => Ok(right),
            _ => Err(Error::WrongKind),
        }
    }

    /// Returns the four dendriform action tables `(lprec, lsucc, rprec, rsucc)`.
    pub fn dend_tables(&self) -> Result<(&Table, &Table, &Table, &Table), Error> {
        match &self.actions {
            Actions::Dendriform { lprec, lsucc, rprec, rsucc } => Ok((lprec, lsucc, rprec, rsucc)),
            _ => Err(Error::WrongKind),
        }
    }

    /// Returns the single Lie action table.
    pub fn lie_action(&self) -> Result<&Table, Error> {
        match &self.actions {
            Actions::Single { action } => Ok(action),
            _ => Err(Error::WrongKind),
        }
    }
}

/// Checks every module identity of the bimodule's kind on all basis tuples.
pub fn validate_bimodule(b: &BimoduleData) -> Result<ViolationReport, Error> {
    b.shape_check()?;
    let d = b.over.dim;
    let md = b.module_dim;
    let mut report = ViolationReport::default();
    match (&b.over.kind, &b.actions) {
        (Kind::Associative, Actions::LeftRight { left, right }) => {
            let t = b.over.table()?;
            for i in 0..d {
                for m in 0..md {
                    for j in 0..d {
                        let lhs = apply_right(right, &left[i][m], j);
                        let rhs = apply_left(left, i, &right[m][j]);
                        report.check("(xm)y = x(my)", &[i, m, j], vec_sub(&lhs, &rhs));
                    }
                }
            }
            for i in 0..d {
                for j in 0..d {
                    for m in 0..md {
                        let lhs = apply_right(left, &t[i][j], m);
                        let rhs = apply_left(left, i, &left[j][m]);
                        report.check("(xy)m = x(ym)", &[i, j, m], vec_sub(&lhs, &rhs));
                    }
                }
            }
            for m in 0..md {
                for i in 0..d {
                    for j in 0..d {
                        let lhs = apply_right(right, &right[m][i], j);
                        let rhs = apply_left(right, m, &t[i][j]);
                        report.check("(mx)y = m(xy)", &[m, i, j], vec_sub(&lhs, &rhs));
                    }
                }
            }
        }
        (Kind::Perm, Actions::LeftRight { left, right }) => {
            let t = b.over.table()?;
            for m in 0..md {
                for i in 0..d {
                    for j in 0..d {
                        let assoc = vec_sub(
                            &apply_right(right, &right[m][i], j),
                            &apply_left(right, m, &t[i][j]),
                        );
                        report.check("(mx)y = m(xy)", &[m, i, j], assoc);
                        let comm =
                            vec_sub(&apply_left(right, m, &t[i][j]), &apply_left(right, m, &t[j][i]));
                        report.check("m(xy) = m(yx)", &[m, i, j], comm);
                    }
                }
            }
            for i in 0..d {
                for m in 0..md {
                    for j in 0..d {
                        let lhs = apply_right(right, &left[i][m], j);
                        let rhs = apply_left(left, i, &right[m][j]);
                        report.check("(xm)y = x(my)", &[i, m, j], vec_sub(&lhs, &rhs));
                    }
                }
            }
            for i in 0..d {
                for m in 0..md {
                    for j in 0..d {
                        let lhs = apply_left(left, i, &right[m][j]);
                        let rhs = apply_right(left, &t[i][j], m);
                        report.check("x(my) = (xy)m", &[i, m, j], vec_sub(&lhs, &rhs));
                    }
                }
            }
        }
        (Kind::PreLie, Actions::LeftRight { left, right }) => {
            let t = b.over.table()?;
            let r_assoc = |m: usize, i: usize, j: usize| {
                vec_sub(&apply_right(right, &right[m][i], j), &apply_left(right, m, &t[i][j]))
            };
            for m in 0..md {
                for i in 0..d {
                    for j in 0..d {
                        let res = vec_sub(&r_assoc(m, i, j), &r_assoc(m, j, i));
                        report.check("(my)z - m(yz) = (mz)y - m(zy)", &[m, i, j], res);
                    }
                }
            }
            let mid_assoc = |i: usize, m: usize, j: usize| {
                vec_sub(&apply_right(right, &left[i][m], j), &apply_left(left, i, &right[m][j]))
            };
            let end_assoc = |i: usize, j: usize, m: usize| {
                vec_sub(&apply_right(left, &t[i][j], m), &apply_left(left, i, &left[j][m]))
            };
            for i in 0..d {
                for m in 0..md {
                    for j in 0..d {
                        let res = vec_sub(&mid_assoc(i, m, j), &end_assoc(i, j, m));
                        report.check("(xm)z - x(mz) = (xz)m - x(zm)", &[i, m, j], res);
                    }
                }
            }
            for i in 0..d {
                for j in 0..d {
                    for m in 0..md {
                        let res = vec_sub(&end_assoc(i, j, m), &mid_assoc(i, m, j));
                        report.check("(xy)m - x(ym) = (xm)y - x(my)", &[i, j, m], res);
                    }
                }
            }
        }
        (Kind::Lie, Actions::Single { action }) => {
            let t = b.over.table()?;
            for i in 0..d {
                for j in 0..d {
                    for m in 0..md {
                        let lhs = apply_right(action, &t[i][j], m);
                        let rhs = vec_sub(
                            &apply_left(action, i, &action[j][m]),
                            &apply_left(action, j, &action[i][m]),
                        );
                        report.check("[x,y]m = x(ym) - y(xm)", &[i, j, m], vec_sub(&lhs, &rhs));
                    }
                }
            }
        }
        (Kind::Dendriform, Actions::Dendriform { lprec, lsucc, rprec, rsucc }) => {
            let (prec, succ) = b.over.prec_succ()?;
            for m in 0..md {
                for j in 0..d {
                    for k in 0..d {
                        let total_jk = vec_add(&prec[j][k], &succ[j][k]);
                        let res1 = vec_sub(
                            &apply_right(rprec, &rprec[m][j], k),
                            &apply_left(rprec, m, &total_jk),
                        );
                        report.check("(m<y)<z = m<(y<z) + m<(y>z)", &[m, j, k], res1);
                        let res2 = vec_sub(
                            &apply_right(rprec, &rsucc[m][j], k),
                            &apply_left(rsucc, m, &prec[j][k]),
                        );
                        report.check("(m>y)<z = m>(y<z)", &[m, j, k], res2);
                        let res3 = vec_sub(
                            &apply_left(rsucc, m, &succ[j][k]),
                            &apply_right(rsucc, &vec_add(&rprec[m][j], &rsucc[m][j]), k),
                        );
                        report.check("m>(y>z) = (m<y)>z + (m>y)>z", &[m, j, k], res3);
                    }
                }
            }
            for i in 0..d {
                for m in 0..md {
                    for k in 0..d {
                        let res1 = vec_sub(
                            &apply_right(rprec, &lprec[i][m], k),
                            &apply_left(lprec, i, &vec_add(&rprec[m][k], &rsucc[m][k])),
                        );
                        report.check("(x<m)<z = x<(m<z) + x<(m>z)", &[i, m, k], res1);
                        let res2 = vec_sub(
                            &apply_right(rprec, &lsucc[i][m], k),
                            &apply_left(lsucc, i, &rprec[m][k]),
                        );
                        report.check("(x>m)<z = x>(m<z)", &[i, m, k], res2);
                        let res3 = vec_sub(
                            &apply_left(lsucc, i, &rsucc[m][k]),
                            &apply_right(rsucc, &vec_add(&lprec[i][m], &lsucc[i][m]), k),
                        );
                        report.check("x>(m>z) = (x<m)>z + (x>m)>z", &[i, m, k], res3);
                    }
                }
            }
            for i in 0..d {
                for j in 0..d {
                    for m in 0..md {
                        let res1 = vec_sub(
                            &apply_right(lprec, &prec[i][j], m),
                            &apply_left(lprec, i, &vec_add(&lprec[j][m], &lsucc[j][m])),
                        );
                        report.check("(x<y)<m = x<(y<m) + x<(y>m)", &[i, j, m], res1);
                        let res2 = vec_sub(
                            &apply_right(lprec, &succ[i][j], m),
                            &apply_left(lsucc, i, &lprec[j][m]),
                        );
                        report.check("(x>y)<m = x>(y<m)", &[i, j, m], res2);
                        let res3 = vec_sub(
                            &apply_left(lsucc, i, &lsucc[j][m]),
                            &apply_right(lsucc, &vec_add(&prec[i][j], &succ[i][j]), m),
                        );
                        report.check("x>(y>m) = (x<y)>m + (x>y)>m", &[i, j, m], res3);
                    }
                }
            }
        }
        _ => return Err(Error::ShapeMismatch),
    }
    Ok(report)
}

/// Builds the associative total of a dendriform presentation, or the Lie
/// bracket of a pre-Lie presentation.
pub fn induced_total(p: &StructurePresentation) -> Result<StructurePresentation, Error> {
    match (p.kind, &p.tables) {
        (Kind::Dendriform, Tables::Split { prec, succ }) => {
            let mut total = prec.clone();
            for i in 0..p.dim {
                for j in 0..p.dim {
                    total[i][j] = vec_add(&prec[i][j], &succ[i][j]);
                }
            }
            StructurePresentation::single(Kind::Associative, p.basis_names.clone(), total)
        }
        (Kind::PreLie, Tables::Single(t)) => {
            let mut bracket = t.clone();
            for i in 0..p.dim {
                for j in 0..p.dim {
                    bracket[i][j] = vec_sub(&t[i][j], &t[j][i]);
                }
            }
            StructurePresentation::single(Kind::Lie, p.basis_names.clone(), bracket)
        }
        _ => Err(Error::WrongKind),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::testfix::{affine_lie, chain_dendriform, projector_prelie};

    #[test]
    fn chain_dendriform_validates() {
        for n in 2..=4 {
            let p = chain_dendriform(n);
            assert!(validate_presentation(&p).unwrap().is_empty(), "n = {n}");
        }
    }

    #[test]
    fn one_sided_projection_is_not_perm() {
        let mut t = zero_table(2, 2, 2);
        t[0][1][0] = int(1);
        let p = StructurePresentation::single(Kind::Perm, basis_labels("e", 2), t).unwrap();
        let report = validate_presentation(&p).unwrap();
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.at, vec![0, 1, 1]);
        assert_eq!(v.identity, "(xy)z = x(yz)");
        assert_eq!(v.residual, vec![int(1), int(0)]);
    }

    #[test]
    fn commutative_associative_tables_are_perm() {
        // Group algebra of the two-element group: e1 is the identity.
        let mut t = zero_table(2, 2, 2);
        t[0][0][0] = int(1);
        t[0][1][1] = int(1);
        t[1][0][1] = int(1);
        t[1][1][0] = int(1);
        let p = StructurePresentation::single(Kind::Perm, basis_labels("e", 2), t).unwrap();
        assert!(validate_presentation(&p).unwrap().is_empty());
    }

    #[test]
    fn affine_lie_validates_and_antisymmetry_is_checked() {
        assert!(validate_presentation(&affine_lie()).unwrap().is_empty());
        let mut t = zero_table(2, 2, 2);
        t[0][1][0] = int(1);
        let bad = StructurePresentation::single(Kind::Lie, basis_labels("e", 2), t).unwrap();
        let report = validate_presentation(&bad).unwrap();
        assert!(report.violations.iter().any(|v| v.identity == "[x,y] = -[y,x]" && v.at == [0, 1]));
    }

    #[test]
    fn projector_prelie_validates() {
        assert!(validate_presentation(&projector_prelie()).unwrap().is_empty());
    }

    #[test]
    fn totals_of_the_fixture_algebras() {
        let total = induced_total(&chain_dendriform(2)).unwrap();
        assert_eq!(total.kind, Kind::Associative);
        let t = total.table().unwrap();
        assert_eq!(t[1][0], vec![int(0), int(1)]);
        assert_eq!(t[0][0], vec![int(1), int(0)]);
        assert_eq!(t[0][1], vec![int(0), int(0)]);
        assert!(validate_presentation(&total).unwrap().is_empty());

        let bracket = induced_total(&projector_prelie()).unwrap();
        assert_eq!(bracket.kind, Kind::Lie);
        let t = bracket.table().unwrap();
        assert_eq!(t[0][1], vec![int(1), int(0)]);
        assert_eq!(t[1][0], vec![int(-1), int(0)]);
        assert!(validate_presentation(&bracket).unwrap().is_empty());

        let zero = StructurePresentation::dendriform(
            basis_labels("e", 2),
            zero_table(2, 2, 2),
            zero_table(2, 2, 2),
        )
        .unwrap();
        let total = induced_total(&zero).unwrap();
        assert!(total.table().unwrap().iter().flatten().all(|v| vec_is_zero(v)));

        assert!(matches!(induced_total(&affine_lie()), Err(Error::WrongKind)));
    }

    #[test]
    fn regular_and_zero_bimodules_validate() {
        let mut comm = zero_table(2, 2, 2);
        comm[0][0][1] = int(1); // e1*e1 = e2, nilpotent commutative
        let perm =
            StructurePresentation::single(Kind::Perm, basis_labels("e", 2), comm).unwrap();
        for p in [chain_dendriform(3), projector_prelie(), affine_lie(), perm] {
            assert!(validate_presentation(&p).unwrap().is_empty(), "{:?}", p.kind);
            assert!(validate_bimodule(&BimoduleData::regular(&p)).unwrap().is_empty(), "{:?}", p.kind);
            assert!(
                validate_bimodule(&BimoduleData::zero_actions(&p, 3)).unwrap().is_empty(),
                "{:?}",
                p.kind
            );
        }
    }

    #[test]
    fn regular_bimodule_over_broken_perm_reports_violations() {
        let mut t = zero_table(2, 2, 2);
        t[0][1][0] = int(1);
        let p = StructurePresentation::single(Kind::Perm, basis_labels("e", 2), t).unwrap();
        let report = validate_bimodule(&BimoduleData::regular(&p)).unwrap();
        assert!(!report.is_empty());
    }

    #[test]
    fn shape_errors_are_reported() {
        let bad = StructurePresentation {
            kind: Kind::Associative,
            dim: 2,
            basis_names: basis_labels("e", 2),
            tables: Tables::Single(zero_table(2, 2, 3)),
        };
        assert!(matches!(validate_presentation(&bad), Err(Error::ShapeMismatch)));
        assert!(StructurePresentation::single(
            Kind::Associative,
            basis_labels("e", 2),
            zero_table(2, 1, 2)
        )
        .is_err());
    }
}
