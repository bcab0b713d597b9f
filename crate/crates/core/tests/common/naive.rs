//! Reference implementation that recomputes every quantifier from scratch
//! over the powerset. Slow and memo-free on purpose; only for n ≤ 3.

use topocheck::{Axiom, Disjointness, MeeklyOptions, Operands, SetClass};

pub struct Naive {
    pub n: usize,
    pub full: u16,
    pub opens: Vec<u16>,
}

fn sub(a: u16, b: u16) -> bool {
    a & b == a
}

impl Naive {
    pub fn new(n: usize, opens: &[u16]) -> Self {
        Naive {
            n,
            full: ((1u32 << n) - 1) as u16,
            opens: opens.to_vec(),
        }
    }

    pub fn all(&self) -> impl Iterator<Item = u16> {
        0..=self.full
    }

    pub fn open(&self, a: u16) -> bool {
        self.opens.contains(&a)
    }

    pub fn closed(&self, a: u16) -> bool {
        self.open(self.full ^ a)
    }

    pub fn cl(&self, a: u16) -> u16 {
        self.all().filter(|&f| self.closed(f) && sub(a, f)).fold(self.full, |acc, f| acc & f)
    }

    pub fn int(&self, a: u16) -> u16 {
        self.opens.iter().filter(|&&u| sub(u, a)).fold(0, |acc, &u| acc | u)
    }

    /// Points every open neighbourhood of which has a closure meeting `a`.
    pub fn theta_cl(&self, a: u16) -> u16 {
        (0..self.n)
            .filter(|&x| {
                self.opens
                    .iter()
                    .filter(|&&u| u >> x & 1 == 1)
                    .all(|&u| self.cl(u) & a != 0)
            })
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// Intersection of every member of `class` containing `a`.
    pub fn class_cl(&self, class: SetClass, a: u16) -> u16 {
        self.all()
            .filter(|&f| sub(a, f) && self.member(class, f))
            .fold(self.full, |acc, f| acc & f)
    }

    fn every_superset(&self, class: SetClass, a: u16, s: u16) -> bool {
        self.all().all(|u| !(sub(a, u) && self.member(class, u)) || sub(s, u))
    }

    pub fn member(&self, class: SetClass, a: u16) -> bool {
        use SetClass::*;
        let c = self.full ^ a;
        let cl = |x| self.cl(x);
        let int = |x| self.int(x);
        match class {
            Closed => cl(a) == a,
            Open => int(a) == a,
            RegularClosed => cl(int(a)) == a,
            RegularOpen => int(cl(a)) == a,
            SemiClosed => sub(int(cl(a)), a),
            SemiOpen => sub(a, cl(int(a))),
            PreClosed => sub(cl(int(a)), a),
            PreOpen => sub(a, int(cl(a))),
            AlphaClosed => sub(cl(int(cl(a))), a),
            AlphaOpen => sub(a, int(cl(int(a)))),
            BetaClosed => sub(int(cl(int(a))), a),
            BetaOpen => sub(a, cl(int(cl(a)))),
            BOpen => sub(a, int(cl(a)) | cl(int(a))),
            BClosed => self.member(BOpen, c),
            WClosed => self.every_superset(SemiOpen, a, cl(a)),
            WOpen => self.member(WClosed, c),
            HClosed => self.every_superset(WOpen, a, self.class_cl(SemiClosed, a)),
            HOpen => self.member(HClosed, c),
            GhClosed => self.every_superset(HOpen, a, self.class_cl(HClosed, a)),
            GhOpen => self.member(GhClosed, c),
            RegularHOpen => self
                .all()
                .any(|u| self.member(RegularOpen, u) && sub(u, a) && sub(a, self.class_cl(HClosed, u))),
            RghClosed => self.every_superset(RegularHOpen, a, self.class_cl(HClosed, a)),
            RghOpen => self.member(RghClosed, c),
            AlphaStarSet => int(cl(int(a))) == int(a),
            CSet => self
                .all()
                .any(|u| self.open(u) && self.all().any(|v| self.member(AlphaStarSet, v) && u & v == a)),
            HCgClosed => self.every_superset(CSet, a, self.class_cl(HClosed, a)),
            HCgOpen => self.member(HCgClosed, c),
            CStarOpen => sub(int(cl(a)), a) && sub(a, cl(int(a))),
            CStarClosed => self.member(CStarOpen, c),
            SCStarClosed => self.every_superset(CStarOpen, a, self.class_cl(SemiClosed, a)),
            SCStarOpen => self.member(SCStarClosed, c),
            GClosed => self.every_superset(Open, a, cl(a)),
            GOpen => self.member(GClosed, c),
            GSCStarClosed => self.every_superset(Open, a, self.class_cl(SCStarClosed, a)),
            GSCStarOpen => self.member(GSCStarClosed, c),
            SCStarGClosed => self.every_superset(SCStarOpen, a, self.class_cl(SCStarClosed, a)),
            SCStarGOpen => self.member(SCStarGClosed, c),
            PiClosed => {
                let rc: Vec<u16> = self.all().filter(|&f| self.member(RegularClosed, f)).collect();
                (0u32..1 << rc.len()).any(|pick| {
                    let meet = rc
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| pick >> i & 1 == 1)
                        .fold(self.full, |acc, (_, &f)| acc & f);
                    meet == a
                })
            }
        }
    }

    fn theta_closed(&self, a: u16) -> bool {
        self.theta_cl(a) == a
    }

    fn dense(&self, u: u16, a: u16) -> bool {
        sub(a, self.cl(u & a))
    }

    /// Some pair of members of `family` passes `ok`.
    fn exists_pair(&self, family: SetClass, ok: impl Fn(u16, u16) -> bool) -> bool {
        self.all()
            .filter(|&u| self.member(family, u))
            .any(|u| self.all().filter(|&v| self.member(family, v)).any(|v| ok(u, v)))
    }

    fn contain(&self, a: u16, b: u16) -> bool {
        self.exists_pair(SetClass::Open, |u, v| sub(a, u) && sub(b, v) && u & v == 0)
    }

    fn pairs(&self, hyp: impl Fn(u16, u16) -> bool, sep: impl Fn(u16, u16) -> bool) -> bool {
        self.all()
            .all(|a| self.all().all(|b| a & b != 0 || !hyp(a, b) || sep(a, b)))
    }

    fn point_set(&self, hyp: impl Fn(u16) -> bool) -> bool {
        self.all().all(|a| {
            !hyp(a) || (0..self.n).all(|x| a >> x & 1 == 1 || self.contain(a, 1 << x))
        })
    }

    pub fn holds(&self, axiom: Axiom, options: MeeklyOptions) -> bool {
        use Axiom::*;
        use SetClass as C;
        let closed = |a| self.closed(a);
        let rc = |a| self.member(C::RegularClosed, a);
        let sc = |a| self.member(C::SCStarClosed, a);
        let pi = |a| self.member(C::PiClosed, a);
        let both_closed = |a, b| closed(a) && closed(b);
        let contain = |a, b| self.contain(a, b);
        let dense_open = |a, b| {
            self.exists_pair(C::Open, |u, v| u & v == 0 && self.dense(u, a) && self.dense(v, b))
        };
        let dense_cl = |a, b| {
            self.exists_pair(C::Open, |u, v| {
                self.cl(u) & self.cl(v) == 0 && self.dense(u, a) && self.dense(v, b)
            })
        };
        let dense_both = |a, b| {
            self.exists_pair(C::Open, |u, v| {
                u & v == 0 && self.cl(u) & self.cl(v) == 0 && self.dense(u, a) && self.dense(v, b)
            })
        };
        match axiom {
            Normal => self.pairs(both_closed, contain),
            KNormal => self.pairs(|a, b| rc(a) && rc(b), contain),
            AlmostNormal => self.pairs(|a, b| both_closed(a, b) && (rc(a) || rc(b)), contain),
            PiNormal => self.pairs(|a, b| both_closed(a, b) && (pi(a) || pi(b)), contain),
            AlmostRegular => self.point_set(rc),
            SoftlyRegular => self.point_set(pi),
            Regular => self.point_set(closed),
            AlphaNormal => self.pairs(both_closed, dense_open),
            BetaNormal => self.pairs(both_closed, dense_cl),
            AlmostBetaNormal => self.pairs(|a, b| both_closed(a, b) && (rc(a) || rc(b)), dense_both),
            BetaKNormal => self.pairs(|a, b| rc(a) && rc(b), dense_both),
            SemiNormal => self.all().all(|a| {
                self.opens.iter().all(|&u| {
                    !closed(a) || !sub(a, u) || self.all().any(|v| self.member(C::RegularOpen, v) && sub(a, v) && sub(v, u))
                })
            }),
            SCStarNormal => self.pairs(both_closed, |a, b| {
                self.exists_pair(C::SCStarOpen, |u, v| sub(a, u) && sub(b, v) && u & v == 0)
            }),
            MeeklySCStarNormal => {
                let hyp = |a, b| match options.operands {
                    Operands::BothClosedOneSCStar => both_closed(a, b) && (sc(a) || sc(b)),
                    Operands::SCStarSideNeedNotBeClosed => (sc(a) && closed(b)) || (closed(a) && sc(b)),
                };
                match options.disjointness {
                    Disjointness::Open => self.pairs(hyp, dense_open),
                    Disjointness::ClosureDisjoint => self.pairs(hyp, dense_cl),
                }
            }
            ThetaNormal => self.pairs(
                |a, b| both_closed(a, b) && (self.theta_closed(a) || self.theta_closed(b)),
                contain,
            ),
            WeaklyThetaNormal => self.pairs(|a, b| self.theta_closed(a) && self.theta_closed(b), contain),
            ExtremallyDisconnected => self.opens.iter().all(|&u| self.open(self.cl(u))),
            T1 => (0..self.n).all(|x| closed(1 << x)),
            Lindelof => true,
        }
    }
}
