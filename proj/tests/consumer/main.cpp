#include <rsac/autocorr.hpp>
#include <rsac/specbounds.hpp>

int main() {
  const auto t = rsac::aperiodic_table_fast(4);
  return t[11] == -5 && rsac::eigen_constants().lambda > 1.65 ? 0 : 1;
}
