#pragma once

#include <optional>
#include <string>

namespace patterns::witness {

struct User {
  std::string name;
  bool admin = false;
};

inline bool is_admin(const User& u) { return u.admin; }

struct Html {
  std::string body;
  friend bool operator==(const Html&, const Html&) = default;
};

// Proof value witnessing that try_admin saw an admin user. Carries no data;
// its existence is the proof. The only constructor is private, so the only
// way to obtain one is through try_admin.
//
// Note the proof is "an admin was checked on this control path", not "this
// particular user is an admin": tokens carry no user identity. Binding the
// token to a user id would be the hardened variant; it is not needed here.
class AdminToken {
 public:
  AdminToken(const AdminToken&) = default;
  AdminToken(AdminToken&&) = default;

 private:
  AdminToken() = default;

  friend std::optional<AdminToken> try_admin(const User& u);
};

// The guard: a token iff the user is an admin.
std::optional<AdminToken> try_admin(const User& u);

// Requires the proof; unreachable without a successful try_admin.
Html render_admin_panel(AdminToken token);

Html render_404();

// Admin route: panel for admins, 404 for everyone else.
Html route_admin_panel(const User& u);

}  // namespace patterns::witness
