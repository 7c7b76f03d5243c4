// EXPECT: private
// AdminToken has no public constructor; fabricating one outside the guard
// must not compile.
#include <typed_patterns/witness.hpp>

using namespace patterns::witness;

int main() {
  const Html ok = route_admin_panel(User{"guest", false});
  const Html leaked = render_admin_panel(AdminToken{}); // MISUSE
  (void)ok;
  return 0;
}
