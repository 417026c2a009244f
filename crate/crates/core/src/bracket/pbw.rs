use crate::error::Result;
use crate::twisted::TwistedResolution;

use super::ops::{bracket, coboundary, is_cocycle};
use super::solve::{solve_any, ClassComparison};
use super::Cochain;

/// Necessary conditions on a pair `(λ, κ)` of 2-cochains for a PBW deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub lambda_is_cocycle: bool,
    pub kappa_is_cocycle: bool,
    /// `[λ, λ]`
    pub lambda_lambda: Cochain,
    /// `[λ, κ]`
    pub lambda_kappa: Cochain,
    /// `[λ, λ] − 2∂*κ`
    pub lambda_lambda_minus_2_dkappa: Cochain,
    pub lambda_lambda_class: ClassComparison,
    pub lambda_kappa_class: ClassComparison,
}

impl ClassReport {
    /// Both inputs are cocycles and both brackets vanish in cohomology.
    pub fn necessary_conditions_hold(&self) -> bool {
        self.lambda_is_cocycle
            && self.kappa_is_cocycle
            && self.lambda_lambda_class.equal
            && self.lambda_kappa_class.equal
    }
}

pub fn pbw_check(res: &TwistedResolution, lambda: &Cochain, kappa: &Cochain) -> Result<ClassReport> {
    let fp = res.ring().fp();
    let ll = bracket(res, lambda, lambda)?;
    let lk = bracket(res, lambda, kappa)?;
    let dk = coboundary(res, kappa);
    let mut diff = ll.clone();
    diff.add_scaled(&dk, fp.from_i64(-2), fp)?;
    Ok(ClassReport {
        lambda_is_cocycle: is_cocycle(res, lambda),
        kappa_is_cocycle: is_cocycle(res, kappa),
        lambda_lambda_class: solve_any(res, &ll)?,
        lambda_kappa_class: solve_any(res, &lk)?,
        lambda_lambda: ll,
        lambda_kappa: lk,
        lambda_lambda_minus_2_dkappa: diff,
    })
}
