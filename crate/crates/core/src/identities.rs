//! Pfaffian identities as executable checks.
//!
//! Each `check_*` function computes the two sides of an identity by separate
//! routes and returns a [`Report`]. Nothing is approximate: a check passes iff
//! the sides are equal in the ring.

use crate::berkowitz::{
    berkowitz_det, char_poly, eval_matrix_poly, pfaffian, pfaffian_coeffs, CoeffSeq,
};
use crate::combinat::{pair_product_oracle, pf_clow_bounded, pf_definition_bounded};
use crate::error::{Error, Result};
use crate::matrix::{
    embed_for_det, make_j, make_transposition, minor_pair, scale_sym, swap_sym, Matrix, SkewMatrix,
};
use crate::pairs::pair_product;
use crate::report::{Report, Witness};
use crate::ring::{Ring, Scalar};

/// Heaviside step: 1 for `k > 0`, else 0.
pub fn theta(k: i64) -> usize {
    usize::from(k > 0)
}

/// `(-1)^(i+j+Θ(j-i))`, as an exponent.
fn cofactor_exp(i: usize, j: usize) -> usize {
    i + j + theta(j as i64 - i as i64)
}

fn check_index(i: usize, dim: usize) -> Result<()> {
    if i == 0 || i > dim {
        return Err(Error::IndexOutOfRange { index: i, dim });
    }
    Ok(())
}

/// Cofactor expansion of `pf(A)` along row `i`.
pub fn pce_expand(a: &SkewMatrix, i: usize) -> Result<Scalar> {
    a.require_even()?;
    let d = a.dim();
    check_index(i, d)?;
    let mut acc = a.ring().zero();
    for j in (1..=d).filter(|&j| j != i) {
        let x = a.entry(i, j);
        if x.is_zero() {
            continue;
        }
        let minor = pfaffian(&minor_pair(a, i, j)?)?;
        acc = &acc + &(x * &minor).signed(cofactor_exp(i, j));
    }
    Ok(acc)
}

/// `A*` with `A*_ij = ã_ji`, `ã_ij = (-1)^(i+j+Θ(j-i)) pf(A⟨i,j⟩)` and zero diagonal.
pub fn cofactor_matrix(a: &SkewMatrix) -> Result<Matrix> {
    a.require_even()?;
    let d = a.dim();
    let ring = a.ring();
    let mut rows = vec![vec![ring.zero(); d]; d];
    for i in 1..=d {
        for j in 1..=d {
            if i != j {
                let t = pfaffian(&minor_pair(a, i, j)?)?.signed(cofactor_exp(i, j));
                rows[j - 1][i - 1] = t;
            }
        }
    }
    Matrix::from_rows(ring, rows)
}

/// `-J((AJ)^(n-1) + p_(n-1)(AJ)^(n-2) + … + p_1 I)`.
pub fn padj(a: &SkewMatrix) -> Result<Matrix> {
    let n = a.require_even()?;
    if n == 0 {
        return Err(Error::DimensionTooSmall { dim: 0, min: 2 });
    }
    let j = make_j(a.ring(), n);
    let aj = a.as_matrix().mul(j.as_matrix())?;
    let p = pfaffian_coeffs(a)?;
    let head = CoeffSeq::new(p.descending()[..n].to_vec());
    Ok(j.as_matrix().mul(&eval_matrix_poly(&head, &aj)?)?.neg())
}

/// `Φ_A(AJ)`, which should be the zero matrix.
pub fn pch_residual(a: &SkewMatrix) -> Result<Matrix> {
    let n = a.require_even()?;
    let aj = a.as_matrix().mul(make_j(a.ring(), n).as_matrix())?;
    eval_matrix_poly(&char_poly(a)?, &aj)
}

/// The bordered matrix `[[0, 0, e_i], [0, 0, -ᵗf_j], [-ᵗe_i, f_j, A]]` whose Pfaffian is `Padj(A)_ij`.
pub fn build_c_ij(a: &SkewMatrix, i: usize, j: usize) -> Result<SkewMatrix> {
    a.require_even()?;
    let d = a.dim();
    check_index(i, d)?;
    check_index(j, d)?;
    if i == j {
        return Err(Error::RepeatedIndex { index: i });
    }
    let ring = a.ring();
    let m = Matrix::from_fn(ring, d + 2, d + 2, |r, c| match (r, c) {
        (1, c) if c == i + 2 => ring.one(),
        (r, 1) if r == i + 2 => ring.one().neg(),
        (2, c) if c == j + 2 => ring.one(),
        (r, 2) if r == j + 2 => ring.one().neg(),
        (r, c) if r > 2 && c > 2 => a.entry(r - 2, c - 2).clone(),
        _ => ring.zero(),
    });
    SkewMatrix::new(m)
}

/// `(-1)^(n(n-1)/2) pf([[0, A], [-ᵗA, 0]])`.
pub fn det_via_pf(b: &Matrix) -> Result<Scalar> {
    let e = embed_for_det(b)?;
    let n = b.rows();
    Ok(pfaffian(&e)?.signed(n * n.saturating_sub(1) / 2))
}

/// Pfaffians of the embedded `I_2n` and of each embedded `I[k]`, where `I[k]`
/// swaps rows `k` and `k+1` of the identity, `1 ≤ k < 2n`.
pub fn embedded_identity_values(n: usize) -> Result<(Scalar, Vec<Scalar>)> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { dim: 0, min: 1 });
    }
    let ring = Ring::Int;
    let d = 2 * n;
    let v0 = pfaffian(&embed_for_det(&Matrix::identity(ring, d))?)?;
    let vk = (1..d)
        .map(|k| pfaffian(&embed_for_det(&make_transposition(ring, d, k, k + 1)?)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((v0, vk))
}

fn failing_inputs(r: Report, inputs: &[&Matrix]) -> Report {
    r.with_inputs(inputs)
}

/// `pfaffian(A) = pf_definition(A)`; refuses dimensions above `bound`.
pub fn check_pb_oracle(a: &SkewMatrix, bound: usize) -> Result<Report> {
    let lhs = pfaffian(a)?;
    let rhs = pf_definition_bounded(a, bound)?;
    Ok(failing_inputs(
        Report::compare("pb", a.dim(), a.ring(), &lhs, &rhs),
        &[a.as_matrix()],
    ))
}

/// The pclow-sequence sum against the PB Pfaffian.
pub fn check_clow(a: &SkewMatrix, bound: usize) -> Result<Report> {
    let lhs = pf_clow_bounded(a, bound)?;
    let rhs = pfaffian(a)?;
    Ok(failing_inputs(
        Report::compare("clow", a.dim(), a.ring(), &lhs, &rhs),
        &[a.as_matrix()],
    ))
}

/// Row independence of the cofactor expansion.
pub fn check_pce(a: &SkewMatrix) -> Result<Report> {
    let pf = pfaffian(a)?;
    let mut parts = Vec::with_capacity(a.dim());
    for i in 1..=a.dim() {
        let mut r = Report::compare("pce", a.dim(), a.ring(), &pce_expand(a, i)?, &pf);
        if let Some(w) = r.witness.as_mut() {
            w.detail = format!("expansion along row {i}");
            w.indices = vec![i];
        }
        parts.push(r);
    }
    Ok(failing_inputs(
        Report::combine("pce", a.dim(), a.ring(), parts),
        &[a.as_matrix()],
    ))
}

/// `pf(ᵗBAB) = pf(A)·det(B)`.
pub fn check_mp(a: &SkewMatrix, b: &Matrix) -> Result<Report> {
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    if a.dim() != b.rows() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.rows(),
        });
    }
    a.ring().ensure_same(b.ring())?;
    let conj = SkewMatrix::new(b.transpose().mul(a.as_matrix())?.mul(b)?)?;
    let lhs = pfaffian(&conj)?;
    let rhs = &pfaffian(a)? * &berkowitz_det(b)?;
    Ok(failing_inputs(
        Report::compare("mp", a.dim(), a.ring(), &lhs, &rhs),
        &[a.as_matrix(), b],
    ))
}

/// Every swap `A[i:j]` rebuilt from adjacent transpositions, one congruence at a time.
///
/// `I_ij` is the product of `2(j-i)-1` adjacent transpositions. Each step applies
/// `X ↦ ᵗT X T` and multiplies the running factor by `det(T)`. The final matrix
/// must be `A[i:j]` and its Pfaffian must be the running factor times `pf(A)`.
pub fn check_transposition_chain(a: &SkewMatrix) -> Result<Report> {
    a.require_even()?;
    let d = a.dim();
    let ring = a.ring();
    let pf = pfaffian(a)?;
    let mut parts = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            let steps: Vec<usize> = (i..j).chain((i..j - 1).rev()).collect();
            let mut x = a.as_matrix().clone();
            let mut factor = ring.one();
            for &k in &steps {
                let t = make_transposition(ring, d, k, k + 1)?;
                x = t.transpose().mul(&x)?.mul(&t)?;
                factor = &factor * &berkowitz_det(&t)?;
            }
            let x = SkewMatrix::new(x)?;
            let expected = swap_sym(a, i, j)?;
            if x != expected {
                let r = Report::compare_matrices(
                    "transposition-chain",
                    ring,
                    x.as_matrix(),
                    expected.as_matrix(),
                );
                parts.push(r);
                continue;
            }
            let lhs = pfaffian(&x)?;
            let mut by_mp = Report::compare("transposition-chain", d, ring, &lhs, &(&factor * &pf));
            let mut negated = Report::compare("transposition-chain", d, ring, &lhs, &pf.neg());
            for r in [&mut by_mp, &mut negated] {
                if let Some(w) = r.witness.as_mut() {
                    w.detail = format!("swap via {} adjacent transpositions", steps.len());
                    w.indices = vec![i, j];
                }
            }
            parts.push(by_mp);
            parts.push(negated);
        }
    }
    Ok(failing_inputs(
        Report::combine("transposition-chain", d, ring, parts),
        &[a.as_matrix()],
    ))
}

/// Multilinearity in each row/column pair, alternation for each swap, and `pf(J_n) = 1`.
pub fn check_pad(a: &SkewMatrix, lambda: &Scalar) -> Result<Report> {
    let n = a.require_even()?;
    let d = a.dim();
    let ring = a.ring();
    let pf = pfaffian(a)?;
    let mut parts = Vec::new();
    for i in 1..=d {
        let lhs = pfaffian(&scale_sym(a, lambda, i)?)?;
        let mut r = Report::compare("pad", d, ring, &lhs, &(lambda * &pf));
        if let Some(w) = r.witness.as_mut() {
            w.detail = format!("multilinearity in row {i} with factor {lambda}");
            w.indices = vec![i];
        }
        parts.push(r);
    }
    for i in 1..=d {
        for j in i + 1..=d {
            let lhs = pfaffian(&swap_sym(a, i, j)?)?;
            let mut r = Report::compare("pad", d, ring, &lhs, &pf.neg());
            if let Some(w) = r.witness.as_mut() {
                w.detail = "alternation".to_string();
                w.indices = vec![i, j];
            }
            parts.push(r);
        }
    }
    let mut r = Report::compare(
        "pad",
        2 * n,
        ring,
        &pfaffian(&make_j(ring, n))?,
        &ring.one(),
    );
    if let Some(w) = r.witness.as_mut() {
        w.detail = "identity value of J".to_string();
    }
    parts.push(r);
    Ok(failing_inputs(
        Report::combine("pad", d, ring, parts),
        &[a.as_matrix()],
    ))
}

/// `pf(λA) = λ^n pf(A)`.
pub fn check_scaling(a: &SkewMatrix, lambda: &Scalar) -> Result<Report> {
    let n = a.require_even()?;
    let lhs = pfaffian(&a.scale(lambda)?)?;
    let rhs = &lambda.pow(n as u32) * &pfaffian(a)?;
    let mut r = Report::compare("scaling", a.dim(), a.ring(), &lhs, &rhs);
    if let Some(w) = r.witness.as_mut() {
        w.detail = format!("factor {lambda}");
    }
    Ok(failing_inputs(r, &[a.as_matrix()]))
}

/// Coefficients of `ᵗA` against the coefficients of `A` with the `k`-th from the top negated for odd `k`.
pub fn check_transpose_coeffs(a: &SkewMatrix) -> Result<Report> {
    let lhs = pfaffian_coeffs(&a.transpose())?;
    let q = pfaffian_coeffs(a)?;
    let rhs = CoeffSeq::new(
        q.descending()
            .iter()
            .enumerate()
            .map(|(k, c)| c.signed(k))
            .collect(),
    );
    let mut r = Report::new(
        "transpose",
        a.dim(),
        a.ring(),
        lhs == rhs,
        lhs.to_string(),
        rhs.to_string(),
    );
    if !r.pass {
        let k = lhs
            .descending()
            .iter()
            .zip(rhs.descending())
            .position(|(x, y)| x != y)
            .unwrap_or(0);
        r.witness = Some(Witness::at(
            "coefficient differs (descending position)",
            &[k + 1],
        ));
    }
    Ok(failing_inputs(r, &[a.as_matrix()]))
}

/// `det(A) = pf(A)^2`.
pub fn check_cayley(a: &SkewMatrix) -> Result<Report> {
    a.require_even()?;
    let lhs = berkowitz_det(a.as_matrix())?;
    let rhs = pfaffian(a)?.pow(2);
    Ok(failing_inputs(
        Report::compare("cayley", a.dim(), a.ring(), &lhs, &rhs),
        &[a.as_matrix()],
    ))
}

/// `Φ_A(AJ) = 0`.
pub fn check_pch(a: &SkewMatrix) -> Result<Report> {
    let res = pch_residual(a)?;
    let zero = Matrix::zeros(a.ring(), res.rows(), res.cols());
    let mut r = Report::compare_matrices("pch", a.ring(), &res, &zero);
    r.dim = a.dim();
    Ok(failing_inputs(r, &[a.as_matrix()]))
}

/// `A·Padj(A) = pf(A)·I`, `Padj(A) = A*` and `A·A* = pf(A)·I`.
pub fn check_padj(a: &SkewMatrix) -> Result<Report> {
    let d = a.dim();
    let ring = a.ring();
    let p = padj(a)?;
    let star = cofactor_matrix(a)?;
    let pf_i = Matrix::scalar_identity(&pfaffian(a)?, d);
    let mut parts = vec![
        Report::compare_matrices("padj", ring, &a.as_matrix().mul(&p)?, &pf_i),
        Report::compare_matrices("padj", ring, &p, &star),
        Report::compare_matrices("padj", ring, &a.as_matrix().mul(&star)?, &pf_i),
    ];
    for (r, what) in
        parts
            .iter_mut()
            .zip(["A·Padj(A) vs pf(A)·I", "Padj(A) vs A*", "A·A* vs pf(A)·I"])
    {
        if let Some(w) = r.witness.as_mut() {
            w.detail = format!("{what}: {}", w.detail);
        }
    }
    Ok(failing_inputs(
        Report::combine("padj", d, ring, parts),
        &[a.as_matrix()],
    ))
}

/// `pf(C_ij) = Padj(A)_ij` for every `i ≠ j`.
pub fn check_c_ij(a: &SkewMatrix) -> Result<Report> {
    let d = a.dim();
    let p = padj(a)?;
    let mut parts = Vec::new();
    for i in 1..=d {
        for j in (1..=d).filter(|&j| j != i) {
            let lhs = pfaffian(&build_c_ij(a, i, j)?)?;
            let mut r = Report::compare("c-ij", d, a.ring(), &lhs, p.entry(i, j));
            if let Some(w) = r.witness.as_mut() {
                w.indices = vec![i, j];
            }
            parts.push(r);
        }
    }
    Ok(failing_inputs(
        Report::combine("c-ij", d, a.ring(), parts),
        &[a.as_matrix()],
    ))
}

/// `det(B)` through the embedded Pfaffian against the Berkowitz determinant.
pub fn check_det_via_pf(b: &Matrix) -> Result<Report> {
    let lhs = det_via_pf(b)?;
    let rhs = berkowitz_det(b)?;
    Ok(failing_inputs(
        Report::compare("embed", b.rows(), b.ring(), &lhs, &rhs),
        &[b],
    ))
}

/// Embedded identity values against `(-1)^n` and `(-1)^(n+1)`.
pub fn check_embedded_identity(n: usize) -> Result<Report> {
    let (v0, vk) = embedded_identity_values(n)?;
    let ring = Ring::Int;
    let mut parts = vec![Report::compare(
        "embed",
        4 * n,
        ring,
        &v0,
        &ring.one().signed(n),
    )];
    for (k, v) in vk.iter().enumerate() {
        let mut r = Report::compare("embed", 4 * n, ring, v, &ring.one().signed(n + 1));
        if let Some(w) = r.witness.as_mut() {
            w.detail = format!("rows {} and {} swapped", k + 1, k + 2);
            w.indices = vec![k + 1];
        }
        parts.push(r);
    }
    Ok(Report::combine("embed", 4 * n, ring, parts))
}

/// `pair_product(A, B) = pf(A)·pf(B)` by the matching oracle, refusing dimensions above `bound`.
pub fn check_pair_product(a: &SkewMatrix, b: &SkewMatrix, bound: usize) -> Result<Report> {
    let lhs = pair_product(a, b)?;
    if a.dim() > bound {
        pf_definition_bounded(a, bound)?;
    }
    let rhs = pair_product_oracle(a, b)?;
    Ok(failing_inputs(
        Report::compare("pairs", a.dim(), a.ring(), &lhs, &rhs),
        &[a.as_matrix(), b.as_matrix()],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{det_leibniz, pf_definition};
    use crate::matrix::{generic_matrix, generic_skew, skew_from_upper};

    fn two(x: &str) -> SkewMatrix {
        skew_from_upper(Ring::Poly, 2, vec![Scalar::var(x)]).unwrap()
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(3), 1);
        assert_eq!(theta(-2), 0);
    }

    #[test]
    fn pce_examples() {
        let g = generic_skew(4, "a");
        for i in 1..=4 {
            assert_eq!(
                pce_expand(&g, i).unwrap().to_string(),
                "a12*a34 - a13*a24 + a14*a23"
            );
        }
        assert_eq!(pce_expand(&two("a"), 1).unwrap(), Scalar::var("a"));
        assert!(pce_expand(&g, 5).is_err());
    }

    #[test]
    fn cofactor_and_padj_of_2x2() {
        let a = two("a");
        let minus_j = make_j(Ring::Poly, 1).as_matrix().neg();
        assert_eq!(cofactor_matrix(&a).unwrap(), minus_j);
        assert_eq!(padj(&a).unwrap(), minus_j);
        let expect = Matrix::scalar_identity(&Scalar::var("a"), 2);
        assert_eq!(a.as_matrix().mul(&minus_j).unwrap(), expect);
    }

    #[test]
    fn generic_4x4_adjugates() {
        let g = generic_skew(4, "a");
        assert!(check_padj(&g).unwrap().pass);
        assert!(check_pch(&g).unwrap().pass);
        assert!(check_c_ij(&g).unwrap().pass);
        let j2 = make_j(Ring::Int, 2);
        let star = cofactor_matrix(&j2).unwrap();
        assert_eq!(
            j2.as_matrix().mul(&star).unwrap(),
            Matrix::identity(Ring::Int, 4)
        );
    }

    #[test]
    fn c_ij_of_j1() {
        let j1 = make_j(Ring::Int, 1);
        let c = build_c_ij(&j1, 1, 2).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(pfaffian(&c).unwrap(), Scalar::from_i64(Ring::Int, -1));
        assert_eq!(
            padj(&j1).unwrap().entry(1, 2),
            &Scalar::from_i64(Ring::Int, -1)
        );
        assert!(build_c_ij(&j1, 1, 1).is_err());
    }

    #[test]
    fn mp_examples() {
        let g = generic_skew(4, "a");
        assert!(check_mp(&g, &Matrix::identity(Ring::Poly, 4)).unwrap().pass);
        let t = make_transposition(Ring::Poly, 4, 1, 3).unwrap();
        let r = check_mp(&g, &t).unwrap();
        assert!(r.pass);
        assert_eq!(
            pfaffian(&swap_sym(&g, 1, 3).unwrap()).unwrap(),
            pfaffian(&g).unwrap().neg()
        );
        let j1 = make_j(Ring::Int, 1);
        let b = Matrix::from_i64_rows(Ring::Int, &[&[2, 0], &[0, 1]]).unwrap();
        let r = check_mp(&j1, &b).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "2");
        let two_generic = check_mp(&two("a"), &generic_matrix(2, 2, "b")).unwrap();
        assert!(two_generic.pass);
    }

    #[test]
    fn transposition_chain_generic() {
        assert!(
            check_transposition_chain(&generic_skew(4, "a"))
                .unwrap()
                .pass
        );
    }

    #[test]
    fn pad_and_scaling() {
        let g = generic_skew(4, "a");
        let lambda = Scalar::var("lambda");
        assert!(check_pad(&g, &lambda).unwrap().pass);
        assert!(check_scaling(&g, &lambda).unwrap().pass);
        assert!(check_scaling(&two("a"), &lambda).unwrap().pass);
    }

    #[test]
    fn det_via_pf_examples() {
        let c = Matrix::from_rows(Ring::Poly, vec![vec![Scalar::var("c")]]).unwrap();
        assert_eq!(det_via_pf(&c).unwrap(), Scalar::var("c"));
        assert!(det_via_pf(&Matrix::identity(Ring::Int, 2))
            .unwrap()
            .is_one());
        let m = Matrix::from_i64_rows(
            Ring::Int,
            &[&[1, 2, 0, -1], &[3, 0, 1, 1], &[0, 2, 2, 5], &[-4, 1, 0, 3]],
        )
        .unwrap();
        assert_eq!(det_via_pf(&m).unwrap(), det_leibniz(&m).unwrap());
    }

    #[test]
    fn embedded_values() {
        let (v0, vk) = embedded_identity_values(1).unwrap();
        assert_eq!(v0, Scalar::from_i64(Ring::Int, -1));
        assert_eq!(vk, vec![Ring::Int.one()]);
        let (v0, vk) = embedded_identity_values(2).unwrap();
        assert!(v0.is_one());
        assert_eq!(vk, vec![Scalar::from_i64(Ring::Int, -1); 3]);
        for n in 1..=3 {
            assert!(check_embedded_identity(n).unwrap().pass);
        }
    }

    #[test]
    fn transpose_coefficients() {
        let g = generic_skew(4, "a");
        let t = pfaffian_coeffs(&g.transpose()).unwrap();
        assert_eq!(t.coeff(1).to_string(), "-a12 - a34");
        assert!(check_transpose_coeffs(&g).unwrap().pass);
        let j2t = pfaffian_coeffs(&make_j(Ring::Int, 2).transpose()).unwrap();
        assert_eq!(j2t.to_string(), "1, -2, 1");
    }

    #[test]
    fn cayley_examples() {
        assert!(check_cayley(&make_j(Ring::Int, 3)).unwrap().pass);
        assert!(check_cayley(&generic_skew(4, "a")).unwrap().pass);
    }

    #[test]
    fn oracle_checks_refuse_large_inputs() {
        let j = make_j(Ring::Int, 7);
        assert!(matches!(
            check_pb_oracle(&j, 12),
            Err(Error::AboveBound { .. })
        ));
        assert!(matches!(
            check_pair_product(&j, &j, 12),
            Err(Error::AboveBound { .. })
        ));
        assert!(check_pb_oracle(&make_j(Ring::Int, 3), 12).unwrap().pass);
        assert_eq!(
            pf_definition(&generic_skew(4, "a")).unwrap(),
            pfaffian(&generic_skew(4, "a")).unwrap()
        );
    }

    #[test]
    fn failing_report_carries_witness() {
        let a = make_j(Ring::Int, 1);
        let b = Matrix::from_i64_rows(Ring::Int, &[&[2, 0], &[0, 1]]).unwrap();
        let r = Report::compare(
            "mp",
            2,
            Ring::Int,
            &pfaffian(&a).unwrap(),
            &berkowitz_det(&b).unwrap(),
        )
        .with_inputs(&[a.as_matrix(), &b]);
        assert!(!r.pass);
        assert_eq!(r.witness.unwrap().matrices.len(), 2);
    }
}
