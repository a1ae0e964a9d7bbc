//! Working-space instrumentation.
//!
//! Algorithms that claim a space bound declare every index-sized cell they
//! hold (registers, loop counters, scratch indices) through a
//! [`RegisterMeter`]. Read-only input is not counted. The peak reading is an
//! empirical certificate for bounds such as `2k + O(1)` words.

/// Counts simultaneously live index-sized working cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RegisterMeter {
    live: usize,
    peak: usize,
}

impl RegisterMeter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Marks `words` more cells as live.
    pub fn claim(&mut self, words: usize) {
        self.live += words;
        self.peak = self.peak.max(self.live);
    }

    /// Releases `words` cells claimed earlier.
    pub fn release(&mut self, words: usize) {
        debug_assert!(words <= self.live, "releasing more words than claimed");
        self.live -= words;
    }

    /// Runs `f` with `words` extra cells live for its duration.
    pub fn scoped<T>(&mut self, words: usize, f: impl FnOnce(&mut Self) -> T) -> T {
        self.claim(words);
        let out = f(self);
        self.release(words);
        out
    }

    pub fn live_words(&self) -> usize {
        self.live
    }

    pub fn peak_words(&self) -> usize {
        self.peak
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peak_tracks_nested_claims() {
        let mut m = RegisterMeter::new();
        m.claim(4);
        m.scoped(3, |m| {
            m.scoped(1, |_| ());
        });
        m.claim(2);
        assert_eq!(m.live_words(), 6);
        assert_eq!(m.peak_words(), 8);
        m.release(6);
        assert_eq!(m.live_words(), 0);
        assert_eq!(m.peak_words(), 8);
    }
}
