#include "gmmrans/stats.hpp"

namespace gmmrans::stats {

Counters& counters() {
  thread_local Counters instance;
  return instance;
}

}  // namespace gmmrans::stats
