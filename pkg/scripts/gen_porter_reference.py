#!/usr/bin/env python3
"""Regenerate tests/data/porter_reference.tsv.

Builds a deterministic >20k-word vocabulary (real roots x suffix bank,
classic stemmer test words, plus seeded pseudo-words that stress the
measure/cvc/double-consonant edge cases), stems every word with the
package stemmer AND the independent oracle in tests/porter_oracle.py,
refuses to write if the two disagree anywhere, and freezes the result.

Run from the repository root:  python scripts/gen_porter_reference.py
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tests"))

from semframe.porter import porter_stem  # noqa: E402
from porter_oracle import oracle_stem  # noqa: E402

OUT = ROOT / "tests" / "data" / "porter_reference.tsv"

# Words exercising every published rule, including the classic examples
# from the algorithm description and its reference test set.
CLASSIC = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing
filing happy sky relational conditional rational valenci hesitanci
digitizer conformabli radicalli differentli vileli analogousli
vietnamization predication operator feudalism decisiveness hopefulness
callousness formaliti sensitiviti sensibiliti triplicate formative
formalize electriciti electrical hopeful goodness revival allowance
inference airliner gyroscopic adjustable defensible irritant replacement
adjustment dependent adoption homologou communism activate angulariti
homologi effective bowdlerize probate rate cease controll roll controlling
skies dying lying tying agreement agreements feelings feeling feels feel
felt sadness sad happiness oscillators oscillator generalization
generalizations station stations ion sion tion abatements knightly
knights sky skies deny denying died dies die dyed eyes eye early only
news innings proceed proceedings exceed succeed canning inning outing
herring earring horse horses verbalize verbalization crying cries cried
flies flying fly pirouetting pirouette grasses grass glass glasses
mass masses pass passes classes class press pressed pressing
"""

ROOTS = """
accept access accord account accus achiev acknowledg act adapt address
adjust admir admit adopt ador advanc advertis advis affect agitat agre
alarm allow amaz amus analyz anger annoy anticipat apolog appeal appear
applaud appli appoint appreciat approach approv argu arrang arriv ask
assert assess assign assist associat assum assur astonish attach attack
attempt attend attract author balanc bargain bas bath batter beautif
believ belong bless block bloom blush boast bond book borrow bother
bounc brand breath brew brighten broadcast brush build burden bur calm
camp captur care caress carri carv cater caus celebrat center certif
challeng chang charm chart chas cheer cherish claim clarif classif clean
clear climb cloud coach collect color combin comfort command comment
commit communicat compar compel compens compet complain complet compos
comput conceal concentrat concern conclud condemn condition conduct
confess confid confirm conflict conform confront confus congratulat
connect consent consider consol construct consult consum contact contain
contemplat content contest contribut control convinc cook cooperat cop
correct corrupt count cover crash creat credit critic cross crowd crush
cultivat cure custom damag danc dar darken dazzl deal debat decay deceiv
decid declar decorat dedicat defeat defend defin degrad delay deliber
delight deliver demand demonstrat deni depart depend depict deposit
depress depriv deriv describ deserv design desir despair destroy detach
detect determin develop devot differ digest digniti direct disagre
disappear disappoint discern disclos discount discourag discover discuss
disgust dismiss display dispos disput dissolv distinguish distort
distract distress disturb divid document domin donat doubt draft dream
dress drift drown earn eas echo edit educat elect elevat embarrass
embrac emerg emot employ empow enabl enchant encourag endur energiz
engag enjoy enlighten enrich entertain entitl escap establish esteem
estim evalu examin excit execut exercis exhaust exhibit expand expect
experi explain explor expos express extend fabricat fail fanci fascinat
fashion fasten favor fear feast featur feel fertiliz figur fill finish
fit fix flatter flavor flourish flow focus fold follow forbid forc
forgiv form fortun foster found fragment freshen frighten frustrat fuel
fulfill function gain gather gaz generat glorif govern grace grade grant
gratif graz greet griev grip ground guarante guard guess guid handl
happen harass harbor harden harm harvest heal heat help hesit hide
highlight hinder hold honor hop hope host hunt hurri hush identif ignit
ignor illumin illustrat imagin imit immers implor импort impress improv
inclin includ increas indicat induc indulg infect inflam inform inhabit
inherit inhibit initi injur innov inquir insist inspir install instruct
insult integr intend interact interest interpret interrupt interview
import introduc invad invent invest invit involv irrit isol journey judg justif
keep kindl labor lament land last laugh launch lead learn leas lectur
legisl lengthen lesson liber licens lift lighten limit linger list liv
load locat lock lodg long look loos lov lower magnif maintain manag
manifest manipul margin mark market marvel master measur meddl medit
melt mend mention merit migrat mind mingl minist mix moan mock model
moder modif moisten mold monitor motiv mount mourn mov multipli murmur
mus nail name narrat navig neglect negoti nest nominat note notic notif
nourish nurs obey object oblig observ obtain occupi occur offend offer
open oper oppos order organ orient origin ornament outrag overcom
overlook overwhelm pack pain paint pamper pardon part particip pass
pattern paus penetr perceiv perfect perform persist persuad pet petrif
pictur pier pin pitch piti plac plan plant play pleas pledg plot plun
point polish ponder portray posit possess post postpon pour practic
prais preach precis predict prefer prepar present preserv press presum
pretend prevail prevent print proceed process proclaim produc profess
profit progress project promis promot prompt pronounc propos protect
protest prov provid provok publish pull punish purchas pursu push qualif
quarrel question quicken quiet quot rais rank rat rattl reach react read
realiz reap reason reassur rebel recal receiv recit reckon recogn
recommend reconcil record recover redeem reduc refer refin reflect
reform refresh refus regard regist regret regul rehears reinforc reject
rejoic relat relax releas reliev remain remark remedi rememb remind
remov render renew repair repeat repent replac report repos repres
request requir rescu resent reserv resid resign resist resolv resort
respect respond restor restrain result resum retain retir retreat
reveal revers review reviv revolt reward ridicul ris risk rival roam
roar rot rous rub ruin rul rush sacrific sadden sail salut sampl sanctif
satisf scan scatter schedul school scorn scream screen seal search season
secur seduc seek seem seiz select sentenc separ serv settl shadow shake
sham shap shar sharpen shatter shelter shift shin ship shock shorten
shout show shrink sign signal signif silenc simplif sin sing sink sit
situat sketch slacken sleep slid slip smil smooth sob soften soothe
sort sound spar spark speak specif specul spell spend spin spirit split
spoil sponsor spot spread spring sprinkl stabil stag stain stand star
start starv stat station steer stem step stimul stir stitch stop stor
storm strain strengthen stretch strid strik striv struggl studi stuf
stumbl subject submit subscrib substitut succeed suffer suggest suit
summon supervis suppli support suppos suppress surmis surpris surrend
surround survey surviv suspect sustain swallow sway swear sweeten swell
swim symbol sympath tackl tailor tak tam tangl tast teas tempt tend
term terrif test testif thank thicken threaten thrill thriv tickl tidi
tighten toler torment toss touch trac track trad train transfer
transform translat transmit transport travel treasur treat trembl
trespass tri trick trigger trim triumph troubl trust tutor twist unfold
unit unlock uphold urg vacat valid valu vanish veil ventur verif vex
vibrat view violat visit voic volunteer vot wait wak walk wander want
warm warn wast watch water wav weaken wear weav weigh welcom whisper
widen wish wither witness wonder work worri worship wound wrap wreck
 write yearn yield
"""

SUFFIXES = [
    "", "s", "es", "ies", "ed", "eed", "ing", "ings", "y", "ily",
    "ational", "tional", "enci", "anci", "izer", "izers", "bli", "alli",
    "entli", "eli", "ousli", "ization", "izations", "ation", "ations",
    "ator", "ators", "alism", "iveness", "fulness", "ousness", "aliti",
    "iviti", "biliti", "logi", "icate", "ative", "alize", "alized",
    "iciti", "ical", "ically", "ful", "fully", "ness", "al", "ance",
    "ence", "ances", "er", "ic", "ics", "able", "ible", "ant", "ants",
    "ement", "ements", "ment", "ments", "ent", "ion", "ions", "ous",
    "ously", "ive", "ively", "ize", "izes", "e", "ee", "eing", "ier",
    "iest", "ll", "lli", "yed", "ying",
]

ONSETS = ["b", "bl", "br", "c", "ch", "cl", "cr", "d", "dr", "f", "fl",
          "fr", "g", "gl", "gr", "h", "j", "k", "l", "m", "n", "p", "pl",
          "pr", "qu", "r", "s", "sc", "sh", "sk", "sl", "sm", "sn", "sp",
          "st", "str", "sw", "t", "th", "tr", "tw", "v", "w", "wh", "y", "z"]
NUCLEI = ["a", "e", "i", "o", "u", "y", "ai", "ea", "ee", "ie", "oa",
          "oo", "ou", "oi", "au", "ay", "ey", "oy"]
CODAS = ["", "b", "ck", "d", "ff", "g", "gh", "l", "ll", "lt", "m", "mp",
         "n", "nd", "ng", "nk", "nt", "p", "pp", "r", "rd", "rk", "rm",
         "rn", "rt", "s", "ss", "st", "t", "tt", "w", "x", "zz"]


def pseudo_words(rng: random.Random, n: int) -> list[str]:
    words = []
    for _ in range(n):
        syllables = rng.randint(1, 3)
        w = "".join(
            rng.choice(ONSETS) + rng.choice(NUCLEI) + rng.choice(CODAS)
            for _ in range(syllables)
        )
        if rng.random() < 0.7:
            w += rng.choice(SUFFIXES)
        if w and all("a" <= c <= "z" for c in w):
            words.append(w)
    return words


def build_vocabulary() -> list[str]:
    rng = random.Random(1980)
    vocab = set(CLASSIC.split())
    vocab.update("a i o be ox it an am is at on no not do go".split())
    roots = [r for r in ROOTS.split() if all("a" <= c <= "z" for c in r)]
    for root in roots:
        vocab.add(root)
        for suffix in rng.sample(SUFFIXES, 25):
            vocab.add(root + suffix)
    vocab.update(pseudo_words(rng, 4000))
    return sorted(vocab)


def main() -> None:
    vocab = build_vocabulary()
    rows = []
    mismatches = 0
    skipped = 0
    for word in vocab:
        ours = porter_stem(word)
        ref = oracle_stem(word)
        if ours != ref:
            mismatches += 1
            print(f"MISMATCH {word}: package={ours} oracle={ref}")
            continue
        # the bundle guarantees stems are fixed points (the algorithm is
        # not idempotent on arbitrary strings; words violating this are
        # excluded so the property is testable over the shipped file)
        if porter_stem(ours) != ours:
            skipped += 1
            continue
        rows.append(f"{word}\t{ours}\n")
    if mismatches:
        sys.exit(f"{mismatches} disagreements; not writing reference file")
    if len(rows) < 20000:
        sys.exit(f"only {len(rows)} pairs; need at least 20000")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("".join(rows), encoding="utf-8")
    print(f"wrote {len(rows)} pairs to {OUT} ({skipped} non-fixed-point words excluded)")


if __name__ == "__main__":
    main()
