#include <doctest.h>

#include "qealm/logic.hpp"
#include "support.hpp"

using namespace qealm;

TEST_CASE("terms distinguish variables from constants") {
    CHECK(var("X").is_var());
    CHECK_FALSE(var("X").is_const());
    CHECK(cst("c1").is_const());
    CHECK(var("X") == var("X"));
    CHECK_FALSE(var("X") == cst("X"));
    CHECK_FALSE(var("X") == var("Y"));
}

TEST_CASE("literal accessors") {
    Literal l{false, "q", {var("X"), cst("c1"), var("Y"), var("X")}};
    CHECK(l.arity() == 4);
    CHECK_FALSE(l.is_ground());
    CHECK(l.variables() == std::vector<std::string>{"X", "Y"});
    CHECK(l.first_position("X") == 1);
    CHECK(l.last_position("X") == 4);
    CHECK(l.first_position("Y") == 3);
    CHECK(l.first_position("Z") == 0);
    CHECK(l.last_position("Z") == 0);

    Literal ground{true, "q", {cst("c1"), cst("c2")}};
    CHECK(ground.is_ground());
    CHECK(ground.variables().empty());

    Literal nullary{true, "p", {}};
    CHECK(nullary.arity() == 0);
    CHECK(nullary.is_ground());
}

TEST_CASE("clause accessors") {
    Clause c{{Literal{true, "p", {var("Y"), var("X")}},
              Literal{false, "q", {var("X"), cst("c1"), var("Z")}}}};
    CHECK(c.size() == 2);
    CHECK_FALSE(c.empty());
    CHECK_FALSE(c.is_ground());
    CHECK(c.variables() == std::vector<std::string>{"Y", "X", "Z"});
    CHECK(c.first_position("X") == 1);  // least over literals
    CHECK(c.first_position("Y") == 1);
    CHECK(c.first_position("Z") == 3);
    CHECK(c.max_arity() == 3);
    CHECK(c.min_arity() == 2);

    Clause empty;
    CHECK(empty.empty());
    CHECK(empty.is_ground());
    CHECK(empty.min_arity() == 0);
    CHECK(empty.max_arity() == 0);
}

TEST_CASE("make_problem collects signature and constants") {
    Problem p = support::pqr_problem();
    CHECK(p.signature.at("p") == 1);
    CHECK(p.signature.at("q") == 2);
    CHECK(p.signature.at("r") == 1);
    CHECK(p.constants == std::set<std::string>{"c1", "c2"});
    CHECK(p.total_literals() == 8);
    CHECK(p.total_variables() == 4);  // X in three clauses, Y in one
    CHECK_FALSE(p.is_ground());
}

TEST_CASE("substitution application") {
    Substitution s;
    s.bindings["X"] = cst("c1");
    s.bindings["Y"] = var("Z");
    CHECK(s(var("X")) == cst("c1"));
    CHECK(s(var("Y")) == var("Z"));
    CHECK(s(var("W")) == var("W"));
    CHECK(s(cst("X")) == cst("X"));  // constants never rebound
    CHECK(s.is_idempotent());

    Substitution cyclic;
    cyclic.bindings["X"] = var("Y");
    cyclic.bindings["Y"] = cst("c1");
    CHECK_FALSE(cyclic.is_idempotent());

    Clause c{{Literal{true, "q", {var("X"), var("Y")}}, Literal{false, "r", {var("W")}}}};
    Clause applied = apply_substitution(c, s);
    CHECK(to_string(applied) == "q(c1,Z) | ~r(W)");
}

TEST_CASE("herbrand universe") {
    Problem p = support::game_problem();
    CHECK(herbrand_universe(p) == std::vector<std::string>{"c1", "c2", "c3"});

    Problem no_constants = qealm::make_problem({Clause{{Literal{true, "p", {var("X")}}}}});
    CHECK(herbrand_universe(no_constants) == std::vector<std::string>{"u0"});

    Problem taken = qealm::make_problem({Clause{{Literal{true, "u0", {var("u1")}}}}});
    CHECK(herbrand_universe(taken) == std::vector<std::string>{"u2"});
}

TEST_CASE("validate_problem flags structural defects") {
    Problem p = support::pqr_problem();
    CHECK(validate_problem(p).empty());

    Problem bad = p;
    bad.signature["q"] = 3;
    auto diags = validate_problem(bad);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().severity == Severity::Error);
    CHECK(diags.front().message.find("arity") != std::string::npos);

    Problem missing = p;
    missing.constants.erase("c2");
    diags = validate_problem(missing);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().message.find("c2") != std::string::npos);

    Problem equality;
    equality.clauses.push_back(Clause{{Literal{true, "=", {var("X"), var("Y")}}}});
    equality.signature["="] = 2;
    diags = validate_problem(equality);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().message.find("equality") != std::string::npos);

    Problem undeclared;
    undeclared.clauses.push_back(Clause{{Literal{true, "p", {}}}});
    diags = validate_problem(undeclared);
    REQUIRE_FALSE(diags.empty());
    CHECK(diags.front().message.find("missing from signature") != std::string::npos);
}

TEST_CASE("rendering") {
    CHECK(to_string(var("X")) == "X");
    CHECK(to_string(Literal{true, "p", {}}) == "p");
    CHECK(to_string(Literal{false, "q", {var("X"), cst("c1")}}) == "~q(X,c1)");
    CHECK(to_string(Clause{}) == "$false");
    Clause c{{Literal{true, "p", {var("X")}}, Literal{false, "q", {var("X"), cst("c1")}}}};
    CHECK(to_string(c) == "p(X) | ~q(X,c1)");
}

TEST_CASE("canonical_clause identifies renamings") {
    Clause a{{Literal{true, "p", {var("X"), var("Y")}}, Literal{false, "q", {var("Y"), var("X")}}}};
    Clause b{{Literal{true, "p", {var("U"), var("W")}}, Literal{false, "q", {var("W"), var("U")}}}};
    Clause c{{Literal{true, "p", {var("U"), var("U")}}, Literal{false, "q", {var("U"), var("U")}}}};
    CHECK(to_string(canonical_clause(a)) == to_string(canonical_clause(b)));
    CHECK(to_string(canonical_clause(a)) == "p(v0,v1) | ~q(v1,v0)");
    CHECK(to_string(canonical_clause(c)) == "p(v0,v0) | ~q(v0,v0)");
    CHECK(to_string(canonical_clause(a)) != to_string(canonical_clause(c)));
}
