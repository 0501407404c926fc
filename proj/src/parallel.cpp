#include "omfam/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "omfam/index_set.hpp"

namespace omfam {

int thread_count() {
  const int available = std::max(1, omp_get_max_threads());
  const char* env = std::getenv("OMFAM_THREADS");
  if (env == nullptr) return available;
  try {
    const int requested = std::stoi(env);
    return requested > 0 ? std::min(requested, available) : available;
  } catch (const std::exception&) {
    return available;
  }
}

bool canonical_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ia = a.indices();
  const auto ib = b.indices();
  return ia < ib;
}

}  // namespace omfam
