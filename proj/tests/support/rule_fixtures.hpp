// One or more premise systems per catalogue rule. Each system is a list of
// mega-inequalities in concrete syntax; `order` is only read by the
// Ackermann rules.
#pragma once

#include <string>
#include <vector>

namespace fixtures {

struct RuleFixture {
    std::string rule;
    std::vector<std::string> system;
    std::string order = "";  // comma separated, against the sorted variables
};

inline const std::vector<RuleFixture>& rule_fixtures() {
    static const std::vector<RuleFixture> all = {
        {"dist.dia.or", {"dia (p \\/ q) <= r"}},
        {"dist.dia.or", {"dia dia (p \\/ box q) <= dia r"}},
        {"dist.not.or", {"r <= ~(p \\/ q)"}},
        {"dist.and.or.left", {"(p \\/ q) /\\ r <= q"}},
        {"dist.and.or.right", {"r /\\ (p \\/ dia q) <= q"}},
        {"dist.down.or", {"down $x . (p \\/ @$x q) <= r"}},
        {"dist.atnom.or", {"@'i (p \\/ q) <= r"}},
        {"dist.atsvar.or", {"down $x . dia @$x (p \\/ q) <= r"}},
        {"dist.imp.or", {"r <= (p \\/ q) -> r"}},
        {"dist.box.and", {"r <= box (p /\\ q)"}},
        {"dist.not.and", {"~(p /\\ q) <= r"}},
        {"dist.or.and.left", {"r <= (p /\\ q) \\/ r"}},
        {"dist.or.and.right", {"r <= q \\/ (p /\\ box r)"}},
        {"dist.down.and", {"r <= down $x . (p /\\ $x)"}},
        {"dist.atnom.and", {"r <= @'i (p /\\ q)"}},
        {"dist.atsvar.and", {"r <= down $x . box @$x (p /\\ q)"}},
        {"dist.imp.and", {"r <= q -> (p /\\ r)"}},
        {"elim.bottom", {"q /\\ ~p <= dia p \\/ q"}},
        {"elim.bottom", {"box ~p <= dia p"}},
        {"elim.top", {"box p <= ~p \\/ dia q"}},
        {"elim.top", {"p <= ~box p"}},
        {"first_approx", {"dia box p <= box dia p"}},
        {"first_approx", {"p <= dia p"}},
        {"first_approx", {"down $x . box ($x -> p) <= 'i"}},
        {"approx.dia.nom", {"'i <= dia box p"}},
        {"approx.dia.svar", {"$x <= dia box p"}},
        {"approx.box.nom", {"box dia p <= ~'i"}},
        {"approx.box.svar", {"box dia p <= ~$x"}},
        {"approx.atnom.right.nom", {"'i <= @'j box p"}},
        {"approx.atnom.right.svar", {"$x <= @'j box p"}},
        {"approx.atnom.left.nom", {"@'j dia p <= ~'i"}},
        {"approx.atnom.left.svar", {"@'j dia p <= ~$x"}},
        {"approx.atsvar.right.nom", {"'i <= @$y box p"}},
        {"approx.atsvar.right.svar", {"$x <= @$y box p"}},
        {"approx.atsvar.left.nom", {"@$y dia p <= ~'i"}},
        {"approx.atsvar.left.svar", {"@$y dia p <= ~$x"}},
        {"approx.down.right.nom", {"'i <= down $x . dia ($x /\\ p)"}},
        {"approx.down.right.svar", {"$y <= down $x . dia ($x /\\ p)"}},
        {"approx.down.left.nom", {"down $x . box ($x \\/ p) <= ~'i"}},
        {"approx.down.left.svar", {"down $x . box ($x \\/ p) <= ~$y"}},
        {"approx.imp.nom", {"p -> dia q <= ~'i"}},
        {"approx.imp.svar", {"box p -> q <= ~$x"}},
        {"resid.not.s1.right.nom", {"'i <= ~box p"}},
        {"resid.not.s1.right.svar", {"$x <= ~box p"}},
        {"resid.not.s1.left.nom", {"~dia p <= ~'i"}},
        {"resid.not.s1.left.svar", {"~dia p <= ~$x"}},
        {"split.and", {"'i <= box p /\\ dia q"}},
        {"split.and", {"forall $y [ $y <= p /\\ box $y ]"}},
        {"split.or", {"box p \\/ q <= ~'j"}},
        {"split.forall", {"forall $y [ ($y <= p) & (bdia $y <= q) ]"}},
        {"resid.not.right", {"'i <= ~p"}},
        {"resid.not.right", {"forall $y [ bdia $y <= ~box p ]"}},
        {"resid.not.left", {"~p <= 'i"}},
        {"resid.box.right", {"'i <= box p"}},
        {"resid.box.right", {"forall $y [ A ($y -> 'i) /\\ $y <= box (p /\\ $y) ]"}},
        {"resid.dia.left", {"dia p <= ~'i"}},
        {"resid.atnom.right", {"'i <= @'j p"}},
        {"resid.atnom.left", {"@'j p <= ~'i"}},
        {"resid.atsvar.right", {"'i <= @$x p"}},
        {"resid.atsvar.right", {"forall $y [ bdia $y <= @$y box p ]"}},
        {"resid.atsvar.left", {"@$x p <= ~'i"}},
        {"resid.down.right", {"'i <= down $x . dia ($x /\\ p)"}},
        {"resid.down.right", {"bdia 'i <= down $x . box ($x -> p)"}},
        {"resid.down.left", {"down $x . box ($x \\/ p) <= ~'i"}},
        {"resid.down.left", {"down $x . dia ($x /\\ p) <= bbox 'j"}},
        {"pack.exists", {"forall $y [ dia ($y /\\ 'i) <= p ]"}},
        {"pack.exists", {"forall $y [ 'i <= p ]"}},
        {"pack.forall", {"forall $y [ p <= box ($y -> ~'i) ]"}},
        {"pack.forall", {"forall $y [ box p <= ~'i ]"}},
        {"ackermann.right", {"dia 'i <= p", "box p <= ~'j"}, "1"},
        {"ackermann.right", {"'i <= p", "bdia 'j <= p", "dia p /\\ q <= ~'k", "'k <= q"}, "1,1"},
        {"ackermann.right", {"box p <= ~'j"}, "1"},
        {"ackermann.left", {"p <= ~'i", "'j <= box p"}, "d"},
        {"ackermann.left", {"p <= bbox ~'i", "p <= ~'k", "'j <= dia p"}, "d"},
    };
    return all;
}

}  // namespace fixtures
