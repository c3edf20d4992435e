//! Single-entry perturbations of tables, used to make sure verifiers are
//! not vacuously true.

/// One mutant: `table` with entry `index` replaced by `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutant {
    pub index: usize,
    pub value: usize,
    pub table: Vec<usize>,
}

/// Every table that differs from `table` in exactly one entry, with values
/// drawn from `0..range`, in `(index, value)` order.
pub fn single_entry_mutants(table: &[usize], range: usize) -> impl Iterator<Item = Mutant> + '_ {
    (0..table.len()).flat_map(move |index| {
        (0..range).filter(move |&v| v != table[index]).map(move |value| {
            let mut t = table.to_vec();
            t[index] = value;
            Mutant { index, value, table: t }
        })
    })
}

/// Flattens rows row-major, returning the row width for [`rebuild`].
pub fn rows_to_flat(rows: &[Vec<usize>]) -> (Vec<usize>, usize) {
    (rows.iter().flatten().copied().collect(), rows.first().map_or(0, Vec::len))
}

pub fn rebuild(flat: &[usize], width: usize) -> Vec<Vec<usize>> {
    if width == 0 {
        return Vec::new();
    }
    flat.chunks(width).map(<[usize]>::to_vec).collect()
}
