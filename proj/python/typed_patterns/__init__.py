"""Typed API-design pattern catalog: python surface of the C++ core.

The compile-time halves of the patterns (typestate handles, the static
parallel-list formatter, the type-keyed registry) only exist in C++; this
package exposes the runtime operations so their behavior is easy to poke at
from python.
"""

from typed_patterns._core import (
    AdminToken,
    ArityError,
    CheckedFile,
    Descriptor,
    FakeFs,
    FixtureError,
    MisuseFault,
    NaiveFile,
    ParseError,
    StringRegistry,
    Template,
    User,
    drain,
    format_checked,
    format_dynamic,
    is_admin,
    parse_template,
    render_404,
    render_admin_panel,
    render_template,
    route_admin_panel,
    run_typed_demo_scenario,
    try_admin,
)

__all__ = [
    "AdminToken",
    "ArityError",
    "CheckedFile",
    "Descriptor",
    "FakeFs",
    "FixtureError",
    "MisuseFault",
    "NaiveFile",
    "ParseError",
    "StringRegistry",
    "Template",
    "User",
    "drain",
    "format_checked",
    "format_dynamic",
    "is_admin",
    "parse_template",
    "render_404",
    "render_admin_panel",
    "render_template",
    "route_admin_panel",
    "run_typed_demo_scenario",
    "try_admin",
]
