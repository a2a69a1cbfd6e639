//! Coordinate rings of the classical algebraic supergroups, actions on
//! affine superspaces, and stabilizer ideals.
//!
//! Only the counit (evaluation at the identity) is materialized. The
//! coproduct and antipode are not needed to check smoothness at a point.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::local::{point_on_variety, tangent_dim, SuperDim};
use crate::point::ClosedPoint;
use crate::poly::SuperPolynomial;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::supermatrix::{adjugate, det, mat_mul, mat_sub, PolyMatrix, SuperMatrix};
use crate::vars::{same_table, Parity, Var, VarTable};

/// An affine supergroup: its coordinate superalgebra and identity point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    name: String,
    base: Presentation,
    identity: ClosedPoint,
}

impl GroupPresentation {
    /// Fails with `PointNotOnVariety` unless `identity` lies on `base`.
    pub fn new(name: impl Into<String>, base: Presentation, identity: ClosedPoint) -> Result<Self> {
        if !point_on_variety(&base, &identity)? {
            return Err(Error::PointNotOnVariety);
        }
        Ok(GroupPresentation {
            name: name.into(),
            base,
            identity,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn identity(&self) -> &ClosedPoint {
        &self.identity
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.base.vars()
    }

    /// The counit `ε`: evaluation at the identity.
    pub fn counit(&self, g: &SuperPolynomial) -> Result<Scalar> {
        g.evaluate(&self.identity)
    }

    /// `dim m₁/m₁²`, the super dimension of the Lie superalgebra.
    pub fn lie_superdim(&self) -> Result<SuperDim> {
        tangent_dim(&self.base, &self.identity)
    }
}

pub fn lie_superdim(g: &GroupPresentation) -> Result<SuperDim> {
    g.lie_superdim()
}

fn index(i: usize, j: usize, wide: bool) -> String {
    if wide {
        format!("{i}_{j}")
    } else {
        format!("{i}{j}")
    }
}

/// Variable names of a generic `m|n` supermatrix: `x`, `y` blocks even,
/// `xi`, `ga` blocks odd, indices from 1.
struct MatrixNames {
    x: Vec<Vec<String>>,
    y: Vec<Vec<String>>,
    xi: Vec<Vec<String>>,
    ga: Vec<Vec<String>>,
}

impl MatrixNames {
    fn new(m: usize, n: usize) -> Self {
        let wide = m.max(n) > 9;
        let grid = |prefix: &str, rows: usize, cols: usize| -> Vec<Vec<String>> {
            (1..=rows)
                .map(|i| (1..=cols).map(|j| format!("{prefix}{}", index(i, j, wide))).collect())
                .collect()
        };
        MatrixNames {
            x: grid("x", m, m),
            y: grid("y", n, n),
            xi: grid("xi", m, n),
            ga: grid("ga", n, m),
        }
    }

    fn even(&self) -> impl Iterator<Item = &String> + '_ {
        self.x.iter().flatten().chain(self.y.iter().flatten())
    }

    fn odd(&self) -> impl Iterator<Item = &String> + '_ {
        self.xi.iter().flatten().chain(self.ga.iter().flatten())
    }
}

fn grid_polys(vars: &Arc<VarTable>, names: &[Vec<String>]) -> PolyMatrix {
    names
        .iter()
        .map(|row| {
            row.iter()
                .map(|n| SuperPolynomial::named(vars, n).expect("declared above"))
                .collect()
        })
        .collect()
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m + n == 0 {
        return Err(Error::BadDims("m + n must be positive".into()));
    }
    if 2 * m * n > crate::vars::MAX_ODD_VARS {
        return Err(Error::BadDims(format!(
            "{m}|{n} needs {} odd variables",
            2 * m * n
        )));
    }
    Ok(())
}

/// The generic supermatrix `[[x, ξ], [γ, y]]` over a table that declares
/// the standard names.
pub fn generic_matrix(vars: &Arc<VarTable>, m: usize, n: usize) -> Result<SuperMatrix> {
    let names = MatrixNames::new(m, n);
    for name in names.even().chain(names.odd()) {
        if vars.lookup(name).is_none() {
            return Err(Error::UnknownVariable(name.clone()));
        }
    }
    SuperMatrix::from_blocks(
        vars,
        grid_polys(vars, &names.x),
        grid_polys(vars, &names.xi),
        grid_polys(vars, &names.ga),
        grid_polys(vars, &names.y),
    )
}

fn identity_coords(vars: &Arc<VarTable>, m: usize, n: usize) -> ClosedPoint {
    let names = MatrixNames::new(m, n);
    let mut coords = vec![Scalar::zero(); vars.n_even()];
    let diagonal = (0..m)
        .map(|i| names.x[i][i].as_str())
        .chain((0..n).map(|a| names.y[a][a].as_str()))
        .chain(["z", "w"]);
    for name in diagonal {
        if let Some(Var::Even(i)) = vars.lookup(name) {
            coords[i] = Scalar::one();
        }
    }
    ClosedPoint::new(coords)
}

/// `GL_{m|n}`: even variables `x` (m²), `y` (n²), `z` (when `n ≥ 1`) and
/// `w` (when `m ≥ 1`); odd variables `ξ` (m·n) and `γ` (n·m); relations
/// `w·det(x) − 1` and `z·det(y) − 1`.
pub fn gl_presentation(m: usize, n: usize) -> Result<GroupPresentation> {
    check_dims(m, n)?;
    let names = MatrixNames::new(m, n);
    let mut even: Vec<String> = names.even().cloned().collect();
    if n > 0 {
        even.push("z".into());
    }
    if m > 0 {
        even.push("w".into());
    }
    let vars = VarTable::new(even, names.odd().cloned().collect::<Vec<_>>())?;
    let one = SuperPolynomial::one(&vars);
    let mut rels = Vec::new();
    if m > 0 {
        let w = SuperPolynomial::named(&vars, "w")?;
        rels.push(&(&w * &det(&vars, &grid_polys(&vars, &names.x))) - &one);
    }
    if n > 0 {
        let z = SuperPolynomial::named(&vars, "z")?;
        rels.push(&(&z * &det(&vars, &grid_polys(&vars, &names.y))) - &one);
    }
    let base = Presentation::new(&vars, rels, Vec::new())?;
    let identity = identity_coords(&vars, m, n);
    GroupPresentation::new(format!("gl({m},{n})"), base, identity)
}

/// The Berezinian of the generic supermatrix inside `C[GL_{m|n}]`, with
/// `s⁻¹` realized as `z·adj(y)` and `det(s⁻¹)` as `z`.
pub fn generic_berezinian(m: usize, n: usize) -> Result<SuperPolynomial> {
    let gl = gl_presentation(m, n)?;
    generic_berezinian_in(gl.vars(), m, n)
}

/// [`generic_berezinian`] over any table declaring the `GL_{m|n}` names.
pub fn generic_berezinian_in(vars: &Arc<VarTable>, m: usize, n: usize) -> Result<SuperPolynomial> {
    let g = generic_matrix(vars, m, n)?;
    if n == 0 {
        return Ok(det(vars, &g.p()));
    }
    let z = SuperPolynomial::named(vars, "z")?;
    if m == 0 {
        return Ok(z);
    }
    let s_inv: PolyMatrix = adjugate(vars, &g.s())
        .iter()
        .map(|row| row.iter().map(|e| &z * e).collect())
        .collect();
    let schur = mat_sub(&g.p(), &mat_mul(vars, &mat_mul(vars, &g.q(), &s_inv), &g.r()));
    Ok(&det(vars, &schur) * &z)
}

/// `SL_{m|n}`: `GL_{m|n}` with the extra relation `Ber − 1`.
pub fn sl_presentation(m: usize, n: usize) -> Result<GroupPresentation> {
    let gl = gl_presentation(m, n)?;
    let ber = generic_berezinian_in(gl.vars(), m, n)?;
    let rel = &ber - &SuperPolynomial::one(gl.vars());
    let base = Presentation::new(
        gl.vars(),
        gl.base()
            .even_gens()
            .iter()
            .cloned()
            .chain(std::iter::once(rel))
            .collect(),
        Vec::new(),
    )?;
    GroupPresentation::new(format!("sl({m},{n})"), base, gl.identity().clone())
}

/// Symmetry type of a bilinear form on `C^{m|n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormFlavor {
    SuperSymmetric,
    SuperAntisymmetric,
}

fn is_zero_block(phi: &[Vec<Scalar>], rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> bool {
    rows.into_iter()
        .all(|i| cols.clone().all(|j| phi[i][j].is_zero()))
}

/// `a[i][j] == sign · b[j][i]` on the given index ranges.
fn transposed_equal(
    phi: &[Vec<Scalar>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
    negate: bool,
) -> bool {
    rows.into_iter().all(|i| {
        cols.clone().all(|j| {
            let t = if negate { -&phi[j][i] } else { phi[j][i].clone() };
            phi[i][j] == t
        })
    })
}

/// Parity of the form and a check of the declared flavor. An even form
/// is super-symmetric when its even block is symmetric and its odd block
/// antisymmetric (the other way round for super-antisymmetric). An odd form
/// is super-symmetric when `Φ₀₁ = Φ₁₀ᵀ` and super-antisymmetric when
/// `Φ₀₁ = −Φ₁₀ᵀ`.
fn classify_form(m: usize, n: usize, phi: &[Vec<Scalar>], flavor: FormFlavor) -> Result<Parity> {
    let size = m + n;
    if phi.len() != size || phi.iter().any(|r| r.len() != size) {
        return Err(Error::BadForm(format!("expected a {size}×{size} matrix")));
    }
    if crate::linalg::det(phi).is_zero() {
        return Err(Error::BadForm("form is degenerate".into()));
    }
    let (e, o) = (0..m, m..size);
    let even = is_zero_block(phi, e.clone(), o.clone()) && is_zero_block(phi, o.clone(), e.clone());
    let odd = is_zero_block(phi, e.clone(), e.clone()) && is_zero_block(phi, o.clone(), o.clone());
    let anti = flavor == FormFlavor::SuperAntisymmetric;
    if even {
        let ok = transposed_equal(phi, e.clone(), e, anti) && transposed_equal(phi, o.clone(), o, !anti);
        if !ok {
            return Err(Error::BadForm(format!("even form is not {flavor:?}")));
        }
        Ok(Parity::Even)
    } else if odd {
        if !transposed_equal(phi, e, o, anti) {
            return Err(Error::BadForm(format!("odd form is not {flavor:?}")));
        }
        Ok(Parity::Odd)
    } else {
        Err(Error::BadForm("form is not parity-homogeneous".into()))
    }
}

/// Supertranspose `[[p, q], [r, s]]^st = [[pᵀ, rᵀ], [−qᵀ, sᵀ]]`, for which
/// `(AB)^st = B^st A^st`.
pub fn supertranspose(a: &SuperMatrix) -> SuperMatrix {
    let (m, n) = a.dims();
    let entries = (0..m + n)
        .map(|i| {
            (0..m + n)
                .map(|j| {
                    let e = a.entry(j, i);
                    if i >= m && j < m {
                        -e
                    } else {
                        e.clone()
                    }
                })
                .collect()
        })
        .collect();
    SuperMatrix::new(a.vars(), m, n, entries).expect("supertranspose keeps the parity layout")
}

/// The supergroup preserving a nondegenerate bilinear form `Φ`: relations
/// are the entries of `g^st·Φ·g − Φ` for the generic supermatrix `g`, with
/// zeros and repeated (proportional) entries dropped.
pub fn form_stabilizer_presentation(
    m: usize,
    n: usize,
    phi: &[Vec<Scalar>],
    flavor: FormFlavor,
) -> Result<GroupPresentation> {
    check_dims(m, n)?;
    classify_form(m, n, phi, flavor)?;
    let names = MatrixNames::new(m, n);
    let vars = VarTable::new(
        names.even().cloned().collect::<Vec<_>>(),
        names.odd().cloned().collect::<Vec<_>>(),
    )?;
    let g = generic_matrix(&vars, m, n)?;
    let phi_poly: PolyMatrix = phi
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| SuperPolynomial::constant(&vars, c.clone()))
                .collect()
        })
        .collect();
    let gst = supertranspose(&g);
    let lhs = mat_mul(&vars, &mat_mul(&vars, gst.entries(), &phi_poly), g.entries());
    let rels: Vec<SuperPolynomial> = mat_sub(&lhs, &phi_poly).into_iter().flatten().collect();
    let base = Presentation::free(&vars).with_relations(rels)?;
    let identity = identity_coords(&vars, m, n);
    let name = match flavor {
        FormFlavor::SuperSymmetric => format!("osp({m},{n})"),
        FormFlavor::SuperAntisymmetric => format!("form-antisym({m},{n})"),
    };
    GroupPresentation::new(name, base, identity)
}

/// `Osp(m|n)` for the form `I_m ⊕ J` with `J = [[0, I], [−I, 0]]` on the
/// odd part; `n` must be even.
pub fn osp_presentation(m: usize, n: usize) -> Result<GroupPresentation> {
    if n % 2 != 0 {
        return Err(Error::BadDims(format!("osp needs an even odd dimension, got {n}")));
    }
    let size = m + n;
    let k = n / 2;
    let mut phi = vec![vec![Scalar::zero(); size]; size];
    for (i, row) in phi.iter_mut().enumerate().take(m) {
        row[i] = Scalar::one();
    }
    for a in 0..k {
        phi[m + a][m + k + a] = Scalar::one();
        phi[m + k + a][m + a] = -Scalar::one();
    }
    let mut g = form_stabilizer_presentation(m, n, &phi, FormFlavor::SuperSymmetric)?;
    g.name = format!("osp({m},{n})");
    Ok(g)
}

/// The periplectic group: stabilizer of the odd super-antisymmetric form
/// `[[0, I_n], [−I_n, 0]]` on `C^{n|n}`.
pub fn psp_presentation(m: usize, n: usize) -> Result<GroupPresentation> {
    if m != n {
        return Err(Error::BadDims(format!("psp needs m = n, got {m}|{n}")));
    }
    let size = 2 * n;
    let mut phi = vec![vec![Scalar::zero(); size]; size];
    for a in 0..n {
        phi[a][n + a] = Scalar::one();
        phi[n + a][a] = -Scalar::one();
    }
    let mut g = form_stabilizer_presentation(m, n, &phi, FormFlavor::SuperAntisymmetric)?;
    g.name = format!("psp({n})");
    Ok(g)
}

/// The supergroup families that can be built by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Gl,
    Sl,
    Osp,
    Psp,
}

impl GroupKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Gl => "gl",
            GroupKind::Sl => "sl",
            GroupKind::Osp => "osp",
            GroupKind::Psp => "psp",
        }
    }

    pub fn build(self, m: usize, n: usize) -> Result<GroupPresentation> {
        match self {
            GroupKind::Gl => gl_presentation(m, n),
            GroupKind::Sl => sl_presentation(m, n),
            GroupKind::Osp => osp_presentation(m, n),
            GroupKind::Psp => psp_presentation(m, n),
        }
    }

    /// Whether the group's table carries `z`, so that the generic
    /// Berezinian can be written over it.
    pub fn has_berezinian(self) -> bool {
        matches!(self, GroupKind::Gl | GroupKind::Sl)
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(GroupKind::Gl),
            "sl" => Ok(GroupKind::Sl),
            "osp" => Ok(GroupKind::Osp),
            "psp" => Ok(GroupKind::Psp),
            _ => Err(Error::UnknownGroup(s.to_string())),
        }
    }
}

/// A morphism `G × X → X` given by its comorphism: for each coordinate of
/// `X` (even ones first), a polynomial over the joint table `G ⊔ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPresentation {
    group: GroupPresentation,
    space: Presentation,
    joint: Arc<VarTable>,
    comorphism: Vec<SuperPolynomial>,
}

impl ActionPresentation {
    /// The joint table of an action of `group` on `space`: the group's
    /// variables, then the space's.
    pub fn joint_table(group: &GroupPresentation, space: &Presentation) -> Result<Arc<VarTable>> {
        group.vars().concat(space.vars())
    }

    pub fn new(
        group: GroupPresentation,
        space: Presentation,
        joint: Arc<VarTable>,
        comorphism: Vec<SuperPolynomial>,
    ) -> Result<Self> {
        let expected = Self::joint_table(&group, &space)?;
        if *joint != *expected {
            return Err(Error::MixedTables);
        }
        let sv = space.vars();
        if comorphism.len() != sv.n_even() + sv.n_odd() {
            return Err(Error::DimensionMismatch {
                expected: sv.n_even() + sv.n_odd(),
                found: comorphism.len(),
            });
        }
        for (k, img) in comorphism.iter().enumerate() {
            if !same_table(img.vars(), &joint) {
                return Err(Error::MixedTables);
            }
            let want = if k < sv.n_even() { Parity::Even } else { Parity::Odd };
            if !img.is_zero() && img.parity() != Some(want) {
                return Err(Error::MixedParityGenerator(img.to_string()));
            }
        }
        Ok(ActionPresentation {
            group,
            space,
            joint,
            comorphism,
        })
    }

    pub fn group(&self) -> &GroupPresentation {
        &self.group
    }

    pub fn space(&self) -> &Presentation {
        &self.space
    }

    pub fn joint(&self) -> &Arc<VarTable> {
        &self.joint
    }

    pub fn comorphism(&self) -> &[SuperPolynomial] {
        &self.comorphism
    }
}

/// `GL_{m|n}` acting on `C^{1|0}` (coordinate `t`) by `t ↦ Ber(g)·t`.
pub fn ber_action_gl(m: usize, n: usize) -> Result<ActionPresentation> {
    let group = gl_presentation(m, n)?;
    let space = Presentation::free(&VarTable::new(["t"], Vec::<&str>::new())?);
    let joint = ActionPresentation::joint_table(&group, &space)?;
    let ber = generic_berezinian_in(group.vars(), m, n)?.embed(&joint)?;
    let t = SuperPolynomial::named(&joint, "t")?;
    ActionPresentation::new(group, space, joint, vec![&ber * &t])
}

/// Presentation of the stabilizer of `u`: the group's relations together
/// with `τ̃(h)` for generators `h` of the maximal ideal `m_u`, where `τ̃`
/// pulls back along the action and then evaluates the space coordinates
/// at `u`.
pub fn stabilizer_ideal(action: &ActionPresentation, u: &ClosedPoint) -> Result<GroupPresentation> {
    let space = action.space();
    if !point_on_variety(space, u)? {
        return Err(Error::PointNotOnVariety);
    }
    let gv = action.group().vars();
    let sv = space.vars();
    let joint = action.joint();

    // τ̃ on the joint table: group variables stay, space coordinates go to u
    let tau_even: Vec<SuperPolynomial> = (0..gv.n_even())
        .map(|i| SuperPolynomial::var(gv, Var::Even(i)))
        .chain(
            u.coords()
                .iter()
                .map(|c| SuperPolynomial::constant(gv, c.clone())),
        )
        .collect();
    let tau_odd: Vec<SuperPolynomial> = (0..gv.n_odd())
        .map(|j| SuperPolynomial::var(gv, Var::Odd(j)))
        .chain((0..sv.n_odd()).map(|_| SuperPolynomial::zero(gv)))
        .collect();
    let tau = |f: &SuperPolynomial| f.substitute(gv, &tau_even, &tau_odd);

    let co = action.comorphism();
    let mut rels = Vec::new();
    for (i, c) in u.coords().iter().enumerate() {
        rels.push(&tau(&co[i])? - &SuperPolynomial::constant(gv, c.clone()));
    }
    for j in 0..sv.n_odd() {
        rels.push(tau(&co[sv.n_even() + j])?);
    }
    let (co_even, co_odd) = co.split_at(sv.n_even());
    for (_, f) in space.generators() {
        let pulled = f.substitute(joint, co_even, co_odd)?;
        rels.push(tau(&pulled)?);
    }
    let base = action.group().base().with_relations(rels)?;
    GroupPresentation::new(
        format!("stab({})", action.group().name()),
        base,
        action.group().identity().clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{smooth_test, truncated_quotient, Verdict};

    #[test]
    fn gl11_shape() {
        let g = gl_presentation(1, 1).unwrap();
        assert_eq!(g.vars().even_names(), &["x11", "y11", "z", "w"]);
        assert_eq!(g.vars().odd_names(), &["xi11", "ga11"]);
        let rels: Vec<String> = g.base().even_gens().iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, vec!["x11*w - 1", "y11*z - 1"]);
        assert_eq!(g.identity(), &ClosedPoint::from_ints(&[1, 1, 1, 1]));
        assert_eq!(g.lie_superdim().unwrap(), SuperDim::new(2, 2));
    }

    #[test]
    fn gl10_is_classical() {
        let g = gl_presentation(1, 0).unwrap();
        assert_eq!(g.vars().even_names(), &["x11", "w"]);
        assert_eq!(g.vars().n_odd(), 0);
        assert_eq!(g.lie_superdim().unwrap(), SuperDim::new(1, 0));
        assert!(gl_presentation(0, 0).is_err());
    }

    #[test]
    fn gl_dimensions() {
        assert_eq!(gl_presentation(2, 1).unwrap().lie_superdim().unwrap(), SuperDim::new(5, 4));
        let g = gl_presentation(2, 2).unwrap();
        assert_eq!(g.vars().n_even(), 4 + 4 + 2);
        assert_eq!(g.vars().n_odd(), 8);
    }

    #[test]
    fn generic_berezinian_one_one() {
        let ber = generic_berezinian(1, 1).unwrap();
        let t = gl_presentation(1, 1).unwrap();
        let expect = &(&SuperPolynomial::named(t.vars(), "x11").unwrap()
            * &SuperPolynomial::named(t.vars(), "z").unwrap())
            - &SuperPolynomial::normalize(t.vars(), Scalar::one(), &["z", "z", "xi11", "ga11"])
                .unwrap();
        assert_eq!(ber, expect);
        assert_eq!(t.counit(&ber).unwrap(), Scalar::one());
        assert_eq!(generic_berezinian(1, 0).unwrap().to_string(), "x11");
    }

    #[test]
    fn sl11_shape() {
        let g = sl_presentation(1, 1).unwrap();
        assert_eq!(g.base().even_gens().len(), 3);
        assert_eq!(g.lie_superdim().unwrap(), SuperDim::new(1, 2));
        let v = smooth_test(g.base(), g.identity(), 4).unwrap();
        assert_eq!(v.verdict, Verdict::SmoothExact);
    }

    #[test]
    fn osp12_dimension() {
        let g = osp_presentation(1, 2).unwrap();
        assert_eq!(g.lie_superdim().unwrap(), SuperDim::new(3, 2));
        assert!(osp_presentation(1, 3).is_err());
    }

    #[test]
    fn orthogonal_groups() {
        for m in 1..=3 {
            let g = osp_presentation(m, 0).unwrap();
            assert_eq!(g.lie_superdim().unwrap(), SuperDim::new(m * (m - 1) / 2, 0));
        }
    }

    #[test]
    fn periplectic_dimension() {
        let g = psp_presentation(1, 1).unwrap();
        assert_eq!(g.lie_superdim().unwrap(), SuperDim::new(1, 1));
        assert!(psp_presentation(1, 2).is_err());
    }

    #[test]
    fn bad_forms() {
        let z = Scalar::zero();
        let o = Scalar::one();
        let degenerate = vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]];
        assert!(matches!(
            form_stabilizer_presentation(1, 1, &degenerate, FormFlavor::SuperSymmetric),
            Err(Error::BadForm(_))
        ));
        // symmetric odd block is the wrong flavor for an even form
        let wrong = vec![
            vec![o.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z.clone(), o.clone()],
        ];
        assert!(matches!(
            form_stabilizer_presentation(1, 2, &wrong, FormFlavor::SuperSymmetric),
            Err(Error::BadForm(_))
        ));
    }

    #[test]
    fn supertranspose_reverses_products() {
        let g = gl_presentation(1, 1).unwrap();
        let a = generic_matrix(g.vars(), 1, 1).unwrap();
        let b = a.matmul(&a).unwrap();
        let lhs = supertranspose(&b);
        let sa = supertranspose(&a);
        assert_eq!(lhs, sa.matmul(&sa).unwrap());
    }

    #[test]
    fn stabilizer_of_ber_action_is_sl() {
        let action = ber_action_gl(1, 1).unwrap();
        let stab = stabilizer_ideal(&action, &ClosedPoint::from_ints(&[1])).unwrap();
        let sl = sl_presentation(1, 1).unwrap();
        assert_eq!(stab.base(), sl.base());
        let a = truncated_quotient(stab.base(), stab.identity(), 3).unwrap();
        let b = truncated_quotient(sl.base(), sl.identity(), 3).unwrap();
        assert_eq!(a.dimension_table(), b.dimension_table());
    }

    #[test]
    fn trivial_stabilizer() {
        let action = ber_action_gl(1, 0).unwrap();
        let stab = stabilizer_ideal(&action, &ClosedPoint::from_ints(&[1])).unwrap();
        assert_eq!(stab.lie_superdim().unwrap(), SuperDim::new(0, 0));
    }

    #[test]
    fn stabilizer_needs_point_on_space() {
        let group = gl_presentation(1, 0).unwrap();
        let sv = VarTable::new(["t"], Vec::<&str>::new()).unwrap();
        let t = SuperPolynomial::named(&sv, "t").unwrap();
        let space = Presentation::from_generators(&sv, [&t - &SuperPolynomial::one(&sv)]).unwrap();
        let joint = ActionPresentation::joint_table(&group, &space).unwrap();
        let tj = SuperPolynomial::named(&joint, "t").unwrap();
        let action = ActionPresentation::new(group, space, joint, vec![tj]).unwrap();
        assert_eq!(
            stabilizer_ideal(&action, &ClosedPoint::from_ints(&[2])).unwrap_err(),
            Error::PointNotOnVariety
        );
        let stab = stabilizer_ideal(&action, &ClosedPoint::from_ints(&[1])).unwrap();
        assert_eq!(stab.lie_superdim().unwrap(), SuperDim::new(1, 0));
    }
}
