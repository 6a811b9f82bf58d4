use mtfp_core::Allocation;

use crate::GaError;

/// An encoded candidate solution: one gene per individual, each gene a
/// one-hot bit string of length `n_groups` whose set bit names the group.
///
/// Genes are stored as the index of the set bit, which makes the one-hot
/// invariant structural: a gene always has exactly one set bit, and the only
/// residual requirement — every index below `n_groups` — is enforced at
/// construction and preserved by all operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chromosome {
    n_groups: usize,
    genes: Vec<usize>,
}

impl Chromosome {
    /// Builds a chromosome from set-bit indices. Errors if any index is out
    /// of range.
    pub fn new(genes: Vec<usize>, n_groups: usize) -> Result<Self, GaError> {
        for (i, &g) in genes.iter().enumerate() {
            if g >= n_groups {
                return Err(GaError::MalformedGene {
                    gene: i,
                    reason: format!("set bit {g} out of range for {n_groups} groups"),
                });
            }
        }
        Ok(Self { n_groups, genes })
    }

    /// Builds a chromosome from explicit bit rows, one row per gene. Errors
    /// unless every row has exactly one set bit.
    pub fn from_bit_rows(rows: &[Vec<u8>]) -> Result<Self, GaError> {
        let n_groups = rows.first().map_or(0, |r| r.len());
        let mut genes = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_groups {
                return Err(GaError::MalformedGene {
                    gene: i,
                    reason: format!("gene has {} bits, expected {n_groups}", row.len()),
                });
            }
            let set: Vec<usize> = row
                .iter()
                .enumerate()
                .filter(|(_, &bit)| bit != 0)
                .map(|(k, _)| k)
                .collect();
            match set.as_slice() {
                [only] => genes.push(*only),
                _ => {
                    return Err(GaError::MalformedGene {
                        gene: i,
                        reason: format!("{} bits set, expected exactly 1", set.len()),
                    })
                }
            }
        }
        Ok(Self { n_groups, genes })
    }

    /// Encodes an allocation. Errors if any group index is out of range.
    pub fn encode(alloc: &Allocation, n_groups: usize) -> Result<Self, GaError> {
        Self::new(alloc.as_slice().to_vec(), n_groups)
    }

    /// Decodes the chromosome: the set bit of gene `i` is the group of
    /// individual `i`. Inverse of [`Chromosome::encode`].
    pub fn decode(&self) -> Allocation {
        Allocation::new(self.genes.clone())
    }

    pub fn n_genes(&self) -> usize {
        self.genes.len()
    }

    pub fn n_groups(&self) -> usize {
        self.n_groups
    }

    /// Set-bit index of gene `i`.
    #[inline]
    pub fn gene(&self, i: usize) -> usize {
        self.genes[i]
    }

    pub fn genes(&self) -> &[usize] {
        &self.genes
    }

    pub(crate) fn set_gene(&mut self, i: usize, value: usize) {
        debug_assert!(value < self.n_groups);
        self.genes[i] = value;
    }

    pub(crate) fn swap_gene_with(&mut self, other: &mut Chromosome, i: usize) {
        std::mem::swap(&mut self.genes[i], &mut other.genes[i]);
    }
}
