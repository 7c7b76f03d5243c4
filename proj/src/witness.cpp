#include <typed_patterns/witness.hpp>

namespace patterns::witness {

std::optional<AdminToken> try_admin(const User& u) {
  if (is_admin(u)) {
    return AdminToken{};
  }
  return std::nullopt;
}

Html render_admin_panel(AdminToken token) {
  (void)token;
  return Html{"<html><body><h1>ADMIN PANEL</h1></body></html>"};
}

Html render_404() { return Html{"<html><body><h1>404 Not Found</h1></body></html>"}; }

Html route_admin_panel(const User& u) {
  if (std::optional<AdminToken> admin = try_admin(u)) {
    return render_admin_panel(*std::move(admin));
  }
  return render_404();
}

}  // namespace patterns::witness
