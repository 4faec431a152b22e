#include <gtest/gtest.h>

#include <functional>

#include "alba/parser.hpp"
#include "alba/sgt.hpp"
#include "support/printers.hpp"
#include "support/generators.hpp"

using namespace alba;

namespace {

std::vector<std::string> preorder(const SignedNode& t) {
    std::vector<std::string> out{t.signed_label()};
    for (const auto& c : t.children)
        for (auto& s : preorder(c)) out.push_back(std::move(s));
    return out;
}

const std::string kBinderIneq = "down $x . (dia box p1 /\\ box (@'i $x /\\ box p2)) <= dia box dia p1 \\/ dia box dia p2";

OrderType ot(const std::vector<std::string>& vars, const std::string& text) { return OrderType::parse(vars, text); }

// Direct reading of the two-segment definition: some split point leaves
// only inner-capable nodes below and outer-capable nodes above.
bool excellent_by_split(const Branch& b) {
    std::vector<Tag> tags;
    for (const SignedNode* n : b)
        if (n->tag != Tag::Leaf) tags.push_back(n->tag);
    for (std::size_t k = 0; k <= tags.size(); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < tags.size() && ok; ++i) ok = i < k ? can_be_inner(tags[i]) : can_be_outer(tags[i]);
        if (ok) return true;
    }
    return false;
}

void flip_check(const SignedNode& a, const SignedNode& b) {
    EXPECT_EQ(a.sign, flip(b.sign));
    ASSERT_EQ(a.children.size(), b.children.size());
    for (std::size_t k = 0; k < a.children.size(); ++k) flip_check(a.children[k], b.children[k]);
}

}  // namespace

TEST(SignedTree, ImplicationTreeSigns) {
    const SignedNode t = build_signed_tree(parse_formula("box (p \\/ ~ dia q) -> box q"), Sign::Plus);
    EXPECT_EQ(preorder(t), (std::vector<std::string>{"+→", "-□", "-∨", "-p", "-¬", "+◇", "+q", "+□", "+q"}));
}

TEST(SignedTree, BinderInequalitySigns) {
    const Inequality q = parse_inequality(kBinderIneq);
    EXPECT_EQ(preorder(build_signed_tree(q.lhs, Sign::Plus)),
              (std::vector<std::string>{"+↓x", "+∧", "+◇", "+□", "+p1", "+□", "+∧", "+@i", "+x", "+□", "+p2"}));
    EXPECT_EQ(preorder(build_signed_tree(q.rhs, Sign::Minus)),
              (std::vector<std::string>{"-∨", "-◇", "-□", "-◇", "-p1", "-◇", "-□", "-◇", "-p2"}));
}

TEST(SignedTree, BinderInequalityTags) {
    const SignedNode t = build_signed_tree(parse_inequality(kBinderIneq).lhs, Sign::Plus);
    EXPECT_TRUE(can_be_outer(t.tag));
    const SignedNode& box_p1 = t.children[0].children[0].children[0];
    EXPECT_EQ(box_p1.signed_label(), "+□");
    EXPECT_EQ(box_p1.tag, Tag::Inner);
    EXPECT_EQ(t.children[0].children[0].tag, Tag::Outer);
}

TEST(SignedTree, SingleLeaf) {
    const SignedNode t = build_signed_tree(mk::prop("p"), Sign::Plus);
    EXPECT_EQ(t.signed_label(), "+p");
    EXPECT_EQ(t.tag, Tag::Leaf);
    EXPECT_TRUE(t.children.empty());
}

TEST(Classify, TableEntries) {
    EXPECT_EQ(classify(Op::Dia, Sign::Plus), Tag::Outer);
    EXPECT_EQ(classify(Op::Or, Sign::Plus), Tag::Outer);
    EXPECT_EQ(classify(Op::Box, Sign::Plus), Tag::Inner);
    EXPECT_EQ(classify(Op::And, Sign::Plus), Tag::Both);
    EXPECT_EQ(classify(Op::Not, Sign::Plus), Tag::Both);
    EXPECT_EQ(classify(Op::Down, Sign::Plus), Tag::Both);
    EXPECT_EQ(classify(Op::AtNom, Sign::Minus), Tag::Both);
    EXPECT_EQ(classify(Op::Box, Sign::Minus), Tag::Outer);
    EXPECT_EQ(classify(Op::Imp, Sign::Minus), Tag::Outer);
    EXPECT_EQ(classify(Op::Dia, Sign::Minus), Tag::Inner);
    EXPECT_EQ(classify(Op::Or, Sign::Minus), Tag::Both);
    EXPECT_EQ(classify(Op::Imp, Sign::Plus), Tag::Neither);
    EXPECT_EQ(classify(Op::BBox, Sign::Minus), Tag::Neither);
    EXPECT_EQ(classify(Op::Forall, Sign::Plus), Tag::Neither);
}

TEST(Sahlqvist, BinderInequality) {
    const Inequality q = parse_inequality(kBinderIneq);
    EXPECT_TRUE(is_epsilon_sahlqvist(q, ot({"p1", "p2"}, "1,1")));
    const auto types = find_order_types(q);
    EXPECT_NE(std::find(types.begin(), types.end(), ot({"p1", "p2"}, "1,1")), types.end());
}

TEST(Sahlqvist, BinderBranchesAreExcellent) {
    const Inequality q = parse_inequality(kBinderIneq);
    const SignedNode t = build_signed_tree(q.lhs, Sign::Plus);
    const auto branches = critical_branches(t, ot({"p1", "p2"}, "1,1"));
    ASSERT_EQ(branches.size(), 2U);
    for (const auto& b : branches) {
        EXPECT_EQ(b.front()->tag, Tag::Leaf);
        EXPECT_EQ(b.back(), &t);
        EXPECT_TRUE(is_excellent(b));
    }
}

TEST(Sahlqvist, SmallCases) {
    EXPECT_TRUE(is_epsilon_sahlqvist(parse_inequality("p <= p"), ot({"p"}, "1")));
    EXPECT_TRUE(is_epsilon_sahlqvist(parse_inequality("dia box p <= box dia p"), ot({"p"}, "1")));
    EXPECT_FALSE(is_epsilon_sahlqvist(parse_inequality("box dia p <= dia box p"), ot({"p"}, "1")));
    EXPECT_FALSE(is_epsilon_sahlqvist(parse_inequality("box dia p <= dia box p"), ot({"p"}, "d")));
    EXPECT_TRUE(find_order_types(parse_inequality("box dia p <= dia box p")).empty());
}

TEST(Sahlqvist, OuterBelowInnerIsNotExcellent) {
    const SignedNode t = build_signed_tree(parse_formula("box dia p"), Sign::Plus);
    const auto branches = critical_branches(t, ot({"p"}, "1"));
    ASSERT_EQ(branches.size(), 1U);
    EXPECT_FALSE(is_excellent(branches[0]));
}

TEST(OrderTypes, Enumeration) {
    const auto both = find_order_types(parse_inequality("dia p <= dia p"));
    EXPECT_EQ(both, (std::vector<OrderType>{ot({"p"}, "1"), ot({"p"}, "d")}));
    const auto none = find_order_types(parse_inequality("dia 'i <= 'i"));
    ASSERT_EQ(none.size(), 1U);
    EXPECT_TRUE(none[0].variables().empty());
}

TEST(OrderTypes, ParseAndDual) {
    const OrderType e = ot({"p", "q"}, "1,d");
    EXPECT_EQ(e.at("p"), Order::One);
    EXPECT_EQ(e.at("q"), Order::Dual);
    EXPECT_EQ(e.dual().to_string(), "d,1");
    EXPECT_FALSE(e.get("r").has_value());
    EXPECT_THROW(ot({"p"}, "1,1"), std::invalid_argument);
    EXPECT_THROW(ot({"p"}, "x"), std::invalid_argument);
}

TEST(Definite, BinderAndDisjunction) {
    const Inequality q = parse_inequality(kBinderIneq);
    const OrderType e = ot({"p1", "p2"}, "1,1");
    EXPECT_TRUE(is_definite(build_signed_tree(q.lhs, Sign::Plus), e));
    EXPECT_FALSE(is_definite(parse_inequality("dia (p \\/ q) <= r"), ot({"p", "q", "r"}, "1,1,1")));
}

TEST(Inner, VacuousWithoutCriticalLeaves) {
    const OrderType e = ot({"p1", "p2"}, "1,1");
    EXPECT_TRUE(is_inner(build_signed_tree(parse_formula("dia box dia p1"), Sign::Minus), e));
    EXPECT_TRUE(is_inner(build_signed_tree(parse_formula("box box p1"), Sign::Plus), e));
    EXPECT_FALSE(is_inner(build_signed_tree(parse_formula("dia box p1"), Sign::Plus), e));
}

TEST(Uniform, SignCheck) {
    EXPECT_FALSE(is_uniform(parse_inequality("dia p <= box p"), ot({"p"}, "d")));
    EXPECT_TRUE(is_uniform(parse_inequality("dia p <= ~box p"), ot({"p"}, "1")));
}

TEST(SignedTree, RootFlipDualizesSigns) {
    testgen::Rng rng(3);
    testgen::FormulaConfig cfg;
    cfg.expanded = true;
    cfg.depth = 6;
    for (int k = 0; k < 500; ++k) {
        const Formula f = testgen::random_formula(rng, cfg);
        flip_check(build_signed_tree(f, Sign::Plus), build_signed_tree(f, Sign::Minus));
    }
}

TEST(SignedTree, PolarityAgreesWithLeafSigns) {
    testgen::Rng rng(4);
    testgen::FormulaConfig cfg;
    cfg.depth = 6;
    for (int k = 0; k < 500; ++k) {
        const Formula f = testgen::random_formula(rng, cfg);
        bool plus = false;
        bool minus = false;
        std::function<void(const SignedNode&)> walk = [&](const SignedNode& n) {
            if (n.op() == Op::Prop && n.formula.name() == "p") (n.sign == Sign::Plus ? plus : minus) = true;
            for (const auto& c : n.children) walk(c);
        };
        walk(build_signed_tree(f, Sign::Plus));
        EXPECT_EQ(is_positive_in(f, "p"), !minus);
        EXPECT_EQ(is_negative_in(f, "p"), !plus);
    }
}

TEST(Sahlqvist, ExcellenceMatchesSplitPointDefinition) {
    testgen::Rng rng(12);
    testgen::FormulaConfig cfg;
    cfg.depth = 5;
    int branches = 0;
    for (int k = 0; k < 400; ++k) {
        const Formula f = testgen::random_formula(rng, cfg);
        const SignedNode t = build_signed_tree(f, k % 2 ? Sign::Plus : Sign::Minus);
        for (const char* e : {"1,1", "d,1", "1,d", "d,d"})
            for (const auto& b : critical_branches(t, ot({"p", "q"}, e))) {
                ++branches;
                ASSERT_EQ(is_excellent(b), excellent_by_split(b)) << to_string(f);
            }
    }
    EXPECT_GT(branches, 200);
}

TEST(Sahlqvist, DroppingAConjunctKeepsClass) {
    testgen::Rng rng(13);
    testgen::SahlqvistGenerator gen(rng, {"p", "q", "r"}, 4);
    int checked = 0;
    for (int k = 0; k < 2000 && checked < 100; ++k) {
        const auto s = gen.next();
        ASSERT_TRUE(is_epsilon_sahlqvist(s.ineq, s.epsilon));
        if (s.ineq.lhs.op() != Op::And) continue;
        ++checked;
        for (std::size_t c = 0; c < 2; ++c) {
            const Inequality smaller{s.ineq.lhs.child(c), s.ineq.rhs};
            std::vector<Order> vals;
            for (const auto& p : order_variables(smaller)) vals.push_back(s.epsilon.at(p));
            EXPECT_TRUE(is_epsilon_sahlqvist(smaller, OrderType(order_variables(smaller), vals)))
                << to_string(smaller);
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(Render, IndentedTree) {
    const std::string r = render_tree(build_signed_tree(parse_formula("dia p"), Sign::Plus));
    EXPECT_NE(r.find("+◇"), std::string::npos);
    EXPECT_NE(r.find("\n  +p"), std::string::npos);
}
