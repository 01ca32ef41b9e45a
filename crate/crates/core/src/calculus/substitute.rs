// SPDX-License-Identifier: Apache-2.0

//! Extension of generator images to ∂- and product-compatible maps.

use std::collections::HashMap;

use super::algebra::ConformalAlgebra;
use super::expr::{Generator, VAExpr};
use super::CalculusError;

/// Maps `a` (over `src`) to `dst` by replacing each generator with its image
/// and re-multiplying the right-nested words in `dst`.
pub fn substitute(
    src: &ConformalAlgebra,
    a: &VAExpr,
    images: &HashMap<Generator, VAExpr>,
    dst: &ConformalAlgebra,
) -> Result<VAExpr, CalculusError> {
    for (g, img) in images {
        let Some(id) = src.id(*g) else { continue };
        let want = src.spec(id).parity;
        if !img.is_zero() && dst.parity(img) != Some(want) {
            return Err(CalculusError::ParityMismatch(src.spec(id).text.clone()));
        }
    }
    let mut cache: HashMap<(Generator, u16), VAExpr> = HashMap::new();
    let mut image_of = |g: Generator, n: u16| -> Result<VAExpr, CalculusError> {
        if let Some(e) = cache.get(&(g, n)) {
            return Ok(e.clone());
        }
        let base = match images.get(&g) {
            Some(e) => e.clone(),
            None => {
                let id = src.id(g).expect("generator of the source algebra");
                let did = dst
                    .id(g)
                    .ok_or_else(|| CalculusError::UnknownGenerator(src.spec(id).text.clone()))?;
                if dst.spec(did).parity != src.spec(id).parity {
                    return Err(CalculusError::ParityMismatch(src.spec(id).text.clone()));
                }
                dst.gen(g)
            }
        };
        let e = dst.derive_n(&base, n as u32);
        cache.insert((g, n), e.clone());
        Ok(e)
    };
    let mut out = VAExpr::zero();
    for (m, c) in a.terms() {
        let mut acc = VAExpr::vacuum();
        for (g, n) in src.decode(m).into_iter().rev() {
            let img = image_of(g, n)?;
            if img.is_zero() {
                acc = VAExpr::zero();
                break;
            }
            acc = dst.nprod(&img, &acc);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}
