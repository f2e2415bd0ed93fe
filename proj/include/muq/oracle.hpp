/*
 * Independent ground truth for small orders: enumerate loopless labeled
 * multigraphs with 2n-4 edges on n vertices, then every rotation system of
 * each, keeping the embeddings whose faces all close after 4 steps. No code
 * is shared with the growth enumerator beyond the map core and canonical
 * modules, so agreement of the two code sets is a real cross-check.
 */
#ifndef MUQ_ORACLE_HPP
#define MUQ_ORACLE_HPP

#include "muq/enumerate.hpp"

namespace muq {

/// Sorted canonical codes of all MUQs of order n, 3 <= n <= 7. Throws
/// OrderTooLargeForOracle beyond that. n = 7 is exhaustive but slow
/// (minutes, not seconds).
std::vector<Code> brute_force_muqs(int n, int jobs = 1);

} // namespace muq

#endif
