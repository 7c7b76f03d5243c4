// EXPECT: no matching function for call to 'render_admin_panel'
// Rendering the admin panel requires an AdminToken; calling it bare must
// not compile.
#include <typed_patterns/witness.hpp>

using namespace patterns::witness;

int main() {
  const Html ok = route_admin_panel(User{"guest", false});
  const Html leaked = render_admin_panel(); // MISUSE
  (void)ok;
  return 0;
}
