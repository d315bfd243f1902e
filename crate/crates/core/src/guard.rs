/// Caps on the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest shape that [`enumerate_k_uniform`](crate::enumerate_k_uniform) accepts.
    pub max_boxes: usize,
    /// Most maximal chains an enumeration may produce.
    pub max_chains: u128,
    /// Most nodes a Hasse diagram may hold.
    pub max_nodes: usize,
    /// Most tori a splitting locus may hold.
    pub max_tori: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_boxes: 16,
            max_chains: 1_000_000,
            max_nodes: 1_000_000,
            max_tori: 1_000_000,
        }
    }
}
