use super::{apply_rij, LabeledTuple, YangBaxterMap, YbError};

/// `T_i = R_{i,i+n−1} ⋯ R_{i,i+2} R_{i,i+1}` with indices mod `n` written in
/// `1..=n`. The rightmost factor `R_{i,i+1}` is applied first.
pub fn transfer_map(
    map: &dyn YangBaxterMap,
    i: usize,
    t: &LabeledTuple,
) -> Result<LabeledTuple, YbError> {
    let n = t.len();
    if i == 0 || i > n {
        return Err(YbError::IndexOutOfRange { index: i, n });
    }
    let mut current = t.clone();
    for step in 1..n {
        let j = (i - 1 + step) % n + 1;
        current = apply_rij(map, i, j, &current).map_err(|e| match e {
            YbError::Map { source, .. } => YbError::TransferStep {
                transfer: i,
                step,
                i,
                j,
                source,
            },
            other => other,
        })?;
    }
    Ok(current)
}

/// `T_1 T_2 ⋯ T_n` applied to `t`: `T_n` acts first.
pub fn transfer_product(
    map: &dyn YangBaxterMap,
    t: &LabeledTuple,
) -> Result<LabeledTuple, YbError> {
    (1..=t.len())
        .rev()
        .try_fold(t.clone(), |acc, i| transfer_map(map, i, &acc))
}
