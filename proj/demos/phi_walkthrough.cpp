// Walkthrough of the core library surface: take a window of the Thue-Morse
// word, read its form, push it through the doubling maps, and classify the
// complementary pair it belongs to.

#include <iostream>

#include "permutex/complexity.hpp"
#include "permutex/serialize.hpp"
#include "permutex/tm_action.hpp"
#include "permutex/typek.hpp"

int main() {
  using namespace permutex;

  WordPrefix T = thue_morse_word();
  std::cout << "thue-morse prefix: " << to_string(T.prefix(32)) << "\n\n";

  const Subpermutation p = subpermutation(T, 5, 5);
  std::cout << "window [5, 9]: " << p.text() << " with form "
            << to_string(form_of(p)) << "\n";
  std::cout << "phi:   " << phi(p).text() << " at start "
            << phi(p).origin()->start << "\n";
  std::cout << "phi_L: " << phi_L(p).text() << "\n";
  std::cout << "phi_R: " << phi_R(p).text() << "\n";
  std::cout << "phi_M: " << phi_M(p).text() << "\n\n";

  const Subpermutation q = subpermutation(T, 23, 5);
  const PairClass pc = classify_pair(p, q);
  std::cout << "window [23, 27]: " << q.text() << ", classified against "
            << p.text() << ": " << pair_kind_name(pc.kind) << " with k=" << pc.k
            << " eps=" << pc.eps << "\n\n";

  const PermSet ps = enumerate_perms(T, 6);
  std::cout << "length 6 realizes " << ps.size() << " permutations ("
            << ps.even_count() << " even, " << ps.odd_count()
            << " odd), closed form says " << tau_closed_form(6) << "\n";
  return 0;
}
