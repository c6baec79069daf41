import sympy as sp, numpy as np, itertools, cmath, math, sys, os
from fractions import Fraction
t = sp.symbols('t')

class F:
    """Q(zeta_N) element as a reduced polynomial in t."""
    def __init__(s, N, p): s.N=N; s.p=sp.rem(sp.Poly(p,t,domain='QQ'), sp.Poly(sp.cyclotomic_poly(N,t),t,domain='QQ'))
    def __add__(a,b): b=lift(a.N,b); return F(a.N,a.p.as_expr()+b.p.as_expr())
    __radd__=__add__
    def __sub__(a,b): b=lift(a.N,b); return F(a.N,a.p.as_expr()-b.p.as_expr())
    def __rsub__(a,b): return lift(a.N,b)-a
    def __mul__(a,b): b=lift(a.N,b); return F(a.N,a.p.as_expr()*b.p.as_expr())
    __rmul__=__mul__
    def __neg__(a): return F(a.N,-a.p.as_expr())
    def __truediv__(a,k): return F(a.N,a.p.as_expr()/sp.Integer(k))
    def num(a): return complex(sp.N(a.p.as_expr().subs(t, sp.exp(2*sp.pi*sp.I/a.N)),30))
    def lit(a):
        terms=[]
        for (k,),c in sorted(a.p.terms()):
            c=sp.Rational(c)
            terms.append((k,c))
        if not terms: return "0"
        out=""
        for k,c in terms:
            neg = c<0; c=abs(c)
            if k==0: body=str(c)
            else: body=("" if c==1 else f"{c}*")+f"z{a.N}^{k}"
            out += ("-" if neg else "") + body if not out else (" - " if neg else " + ")+body
        return out
def lift(N,b):
    return b if isinstance(b,F) else F(N,sp.nsimplify(b))
def Z(N,k): return F(N,t**(k%N))
def I(N): assert N%4==0; return Z(N,N//4)
def cos2pi(N,p,q):  # cos(2 pi p/q)
    assert (N*p)%q==0; k=N*p//q; return (Z(N,k)+Z(N,-k))/2
def sin2pi(N,p,q):
    assert (N*p)%q==0 and N%4==0; k=N*p//q; return (Z(N,k)-Z(N,-k))*(-I(N))/2
def sqrt2(N): return Z(N,N//8)+Z(N,-N//8)
def phi(N): return -Z(N,2*N//5)-Z(N,3*N//5)
def sqrt3(N): return Z(N,N//12)+Z(N,-N//12)

def matlit(M): return "[" + ",".join("["+", ".join(e.lit() for e in row)+"]" for row in M) + "]"
def nummat(M): return np.array([[e.num() for e in row] for row in M])

def quat_spin(N,w,x,y,z):
    i=I(N); return [[w-i*z, -i*x-y],[-i*x+y, w+i*z]]
def quat_rot(N,w,x,y,z):
    two=F(N,2); one=F(N,1)
    return [[one-two*(y*y+z*z), two*(x*y-z*w), two*(x*z+y*w)],
            [two*(x*y+z*w), one-two*(x*x+z*z), two*(y*z-x*w)],
            [two*(x*z-y*w), two*(y*z+x*w), one-two*(x*x+y*y)]]

def closure(gens):
    d=gens[0][1].shape[0]; key=lambda m: tuple(np.round(m,8).flatten().tolist())
    els=[np.eye(d,dtype=complex)]; words=[[]]; idx={key(els[0]):0}; h=0
    while h<len(els):
        for gi,(lab,g) in enumerate(gens):
            m=els[h]@g; k=key(m)
            if k not in idx: idx[k]=len(els); els.append(m); words.append(words[h]+[lab])
        h+=1
    return els,words,idx,key

def word_el(gens,word,d):
    m=np.eye(d,dtype=complex); gd=dict(gens)
    if word!='e':
        for l in word.split('.'): m=m@gd[l]
    return m

def check(name, gens_num, classes, irreps, dim):
    els,words,idx,key=closure(gens_num)
    n=len(els)
    cls_of={}
    cl=[]
    for i in range(n):
        if i in cls_of: continue
        orb={i}; st=[i]
        while st:
            j=st.pop()
            for g in els:
                k=idx[key(g@els[j]@g.conj().T)]
                if k not in orb: orb.add(k); st.append(k)
        for k in orb: cls_of[k]=len(cl)
        cl.append(orb)
    assert len(cl)==len(classes), (name,len(cl),len(classes))
    used=set()
    for c in classes:
        m=word_el(gens_num,c['rep'],dim); ci=cls_of[idx[key(m)]]
        assert ci not in used,(name,c); used.add(ci)
        assert len(cl[ci])==c['size'],(name,c,len(cl[ci]))
        tr=np.trace(m)
        if c.get('angle') is not None:
            th=math.pi*float(Fraction(c['angle']))
            exp = 1+2*math.cos(th) if dim==3 else (2*math.cos(th/2) if dim==2 else None)
            if exp is not None: assert abs(tr-exp)<1e-9,(name,c,tr,exp)
        c['_idx']=ci
    sizes=[c['size'] for c in classes]
    assert sum(sizes)==n
    vals={nm:[v.num() for v in vs] for nm,(_,vs) in irreps.items()}
    for a in vals:
        for b in vals:
            s=sum(sz*x*np.conj(y) for sz,x,y in zip(sizes,vals[a],vals[b]))
            assert abs(s-(n if a==b else 0))<1e-8,(name,a,b,s)
    assert len(irreps)==len(classes),name
    return n

def fmt_angle(a):
    if a is None: return ""
    f=Fraction(a)
    return f" angle {f.numerator}/{f.denominator} pi" if f.denominator!=1 else f" angle {f.numerator} pi"

def write(name, N, gens, classes, irreps, defining, reps=(), aliases=(), cover=None, comment=""):
    dim=len(gens[0][1])
    gens_num=[(l,nummat(m)) for l,m in gens]
    order=check(name,gens_num,classes,irreps,dim)
    for rn,rg in reps:  # numeric homomorphism sanity via closure size not needed; exact check in C++
        pass
    lines=[f"# {comment}" if comment else None, f"group {name}", f"order {order}", f"cyclotomic {N}"]
    if cover: lines.append(f"cover {cover}")
    lines.append(f"defining {defining}")
    for l,m in gens: lines.append(f"gen {l} = {matlit(m)}")
    for c in classes:
        lines.append(f"class {c['name']} rep {c['rep']} size {c['size']}"+fmt_angle(c.get('angle')))
    for nm,(kind,vs) in irreps.items():
        lines.append(f"irrep {nm} {kind} : "+", ".join(v.lit() for v in vs))
    for rn,rg in reps:
        lines.append(f"rep {rn}")
        for l,m in rg: lines.append(f"gen {l} = {matlit(m)}")
    for a,b in aliases: lines.append(f"alias {a} = {b}")
    with open(os.path.join(os.path.dirname(os.path.abspath(__file__)),f"{name}.grp"),"w") as fh:
        fh.write("\n".join(x for x in lines if x is not None)+"\n")
    print(name, order)

def one(N,v=1): return F(N,v)
def pw(word,s): return 'e' if s==0 else '.'.join([word]*s)

def half(k):  # k/2 label
    return str(k//2) if k%2==0 else f"{k}/2"

# ---------------------------------------------------------------- trivial
write("trivial1",1,[("g",[[one(1)]])],[dict(name="E",rep="e",size=1)],{"A":("vector",[one(1)])},"A",comment="trivial group acting on one variable")
write("trivial2",1,[("g",[[one(1),one(1,0)],[one(1,0),one(1)]])],[dict(name="E",rep="e",size=1,angle=0)],{"A":("vector",[one(1)])},"A",comment="trivial group acting on two variables")
write("trivial3",1,[("g",[[one(1) if i==j else one(1,0) for j in range(3)] for i in range(3)])],[dict(name="E",rep="e",size=1,angle=0)],{"A":("vector",[one(1)])},"A",comment="trivial group acting on three variables")

def Rz(N,n):
    c=cos2pi(N,1,n); s=sin2pi(N,1,n) if n>2 else one(N,0)
    if n==4: s=one(N,1)
    return [[c,-s,one(N,0)],[s,c,one(N,0)],[one(N,0),one(N,0),one(N,1)]]
def Ry_pi(N): return [[one(N,-1),one(N,0),one(N,0)],[one(N,0),one(N,1),one(N,0)],[one(N,0),one(N,0),one(N,-1)]]

# ---------------------------------------------------------------- cyclic
for n,N,Ns in [(2,4,4),(3,12,12),(4,4,8),(6,12,12)]:
    classes=[dict(name=f"C{n}^{s}" if s>1 else (f"C{n}" if s==1 else "E"),rep=pw('a',s),size=1,angle=Fraction(2*s,n)) for s in range(n)]
    irreps={f"A_{k}":("vector",[Z(N,N*k*s//n) for s in range(n)]) for k in range(n)}
    write(f"C{n}",N,[("a",Rz(N,n))],classes,irreps,"rot",reps=[],cover=None,comment=f"cyclic rotation group C{n} about z")
    # double
    m=2*n
    cl=[dict(name=("E" if s==0 else ("-E" if s==n else f"a^{s}")),rep=pw('a',s),size=1,angle=Fraction(2*s,n)) for s in range(m)]
    ir={f"A_{k}":("spinor" if k%2 else "vector",[Z(Ns,Ns*k*s//m) for s in range(m)]) for k in range(m)}
    a=[[Z(Ns,-Ns//m),one(Ns,0)],[one(Ns,0),Z(Ns,Ns//m)]]
    write(f"2C{n}",Ns,[("a",a)],cl,ir,"spin",cover=f"C{n}",comment=f"double cover of C{n}")

# ---------------------------------------------------------------- dihedral
for n,N in [(2,4),(3,12),(4,4),(6,12)]:
    cl=[dict(name="E",rep="e",size=1,angle=0)]
    for s in range(1,n//2+1):
        cl.append(dict(name=f"C{n}^{s}" if s>1 else f"C{n}" if n>2 else "C2z",rep=pw('a',s),size=1 if 2*s==n else 2,angle=Fraction(2*s,n)))
    if n%2: cl.append(dict(name="C2'",rep="b",size=n,angle=1))
    else:
        cl.append(dict(name="C2'",rep="b",size=n//2,angle=1)); cl.append(dict(name="C2''",rep="b.a",size=n//2,angle=1))
    def one_dim(av,bv):
        vals=[]
        for c in cl:
            w=c['rep']; 
            if w=='e': vals.append(one(N))
            elif w.startswith('b'): vals.append(one(N,bv*(av if w=='b.a' else 1)))
            else: vals.append(one(N,av**len(w.split('.'))))
        return vals
    ir={"A1":("vector",one_dim(1,1)),"A2":("vector",one_dim(1,-1))}
    if n%2==0: ir["B1"]=("vector",one_dim(-1,1)); ir["B2"]=("vector",one_dim(-1,-1))
    ks=list(range(1,(n+1)//2))
    for k in ks:
        vals=[]
        for c in cl:
            w=c['rep']
            if w=='e': vals.append(one(N,2))
            elif w.startswith('b'): vals.append(one(N,0))
            else: s=len(w.split('.')); vals.append(2*cos2pi(N,k*s,n))
        ir["E" if len(ks)==1 else f"E{k}"]=("vector",vals)
    reps=[]
    if n==3:
        c=cos2pi(N,1,3); s=sin2pi(N,1,3)
        reps=[("A1",[("a",[[one(N)]]),("b",[[one(N)]])]),("A2",[("a",[[one(N)]]),("b",[[one(N,-1)]])]),
              ("E",[("a",[[c,-s],[s,c]]),("b",[[one(N,-1),one(N,0)],[one(N,0),one(N,1)]])])]
    write(f"D{n}",N,[("a",Rz(N,n)),("b",Ry_pi(N))],cl,ir,"rot",reps=reps,comment=f"dihedral rotation group D{n}")

# ---------------------------------------------------------------- dicyclic
for n,N in [(2,4),(3,12),(4,8),(6,12)]:
    m=2*n
    a=[[Z(N,-N//m),one(N,0)],[one(N,0),Z(N,N//m)]]
    b=[[one(N,0),one(N,-1)],[one(N,1),one(N,0)]]
    cl=[dict(name="E",rep="e",size=1,angle=0),dict(name="-E",rep=pw('a',n),size=1,angle=2)]
    for s in range(1,n): cl.append(dict(name=f"a^{s}" if s>1 else "a",rep=pw('a',s),size=2,angle=Fraction(2*s,n)))
    cl.append(dict(name="b",rep="b",size=n,angle=1)); cl.append(dict(name="ba",rep="b.a",size=n,angle=1))
    def val1(av,bv):
        out=[]
        for c in cl:
            w=c['rep']
            if w=='e': out.append(one(N))
            elif w=='b': out.append(bv)
            elif w=='b.a': out.append(bv*av)
            else: out.append(one(N,av**len(w.split('.'))))
        return out
    ir={}
    if n%2==0:
        for nm,(av,bv) in {"A1":(1,1),"A2":(1,-1),"B1":(-1,1),"B2":(-1,-1)}.items(): ir[nm]=("vector",val1(av,one(N,bv)))
    else:
        ir["A_0"]=("vector",val1(1,one(N,1))); ir["A_1"]=("vector",val1(1,one(N,-1)))
    for k in range(1,n):
        vals=[]
        for c in cl:
            w=c['rep']
            if w=='e': vals.append(one(N,2))
            elif w.startswith('b'): vals.append(one(N,0))
            else: s=len(w.split('.')); vals.append(Z(N,N*k*s//m)+Z(N,-N*k*s//m))
        ir[f"E_{half(k)}"]=("spinor" if k%2 else "vector",vals)
    if n%2==1:
        ir["E_3/2^L"]=("spinor",val1(-1,-I(N))); ir["E_3/2^R"]=("spinor",val1(-1,I(N)))
    reps=[]; aliases=[]
    if n==3:
        c=cos2pi(N,1,3); s=sin2pi(N,1,3)
        reps=[("A_0",[("a",[[one(N)]]),("b",[[one(N)]])]),("A_1",[("a",[[one(N)]]),("b",[[one(N,-1)]])]),
              ("E_1",[("a",[[c,-s],[s,c]]),("b",[[one(N,-1),one(N,0)],[one(N,0),one(N,1)]])])]
        aliases=[("E","E_1"),("A1","A_0"),("A2","A_1")]
    write(f"2D{n}",N,[("a",a),("b",b)],cl,ir,"E_1/2",reps=reps,aliases=aliases,cover=f"D{n}",comment=f"binary dihedral (dicyclic) group, double cover of D{n}")

# ---------------------------------------------------------------- tetrahedral / octahedral
def perm3(N): z=one(N,0); o=one(N,1); return [[z,z,o],[o,z,z],[z,o,z]]
N=3
w3=Z(3,1)
d2=[[one(N,-1),one(N,0),one(N,0)],[one(N,0),one(N,-1),one(N,0)],[one(N,0),one(N,0),one(N,1)]]
cl=[dict(name="E",rep="e",size=1,angle=0),dict(name="C2",rep="d",size=3,angle=1),dict(name="C3",rep="c",size=4,angle=Fraction(2,3)),dict(name="C3^2",rep="c.c",size=4,angle=Fraction(4,3))]
ir={"A":("vector",[one(N)]*4),"1E":("vector",[one(N),one(N),w3,w3*w3]),"2E":("vector",[one(N),one(N),w3*w3,w3]),"T":("vector",[one(N,3),one(N,-1),one(N,0),one(N,0)])}
write("T",3,[("c",perm3(3)),("d",d2)],cl,ir,"T",comment="tetrahedral rotation group")

N=12; w=Z(N,4); h=F(N,sp.Rational(1,2))
c2=quat_spin(N,h,h,h,h); dz=[[-I(N),one(N,0)],[one(N,0),I(N)]]
cl=[dict(name="E",rep="e",size=1,angle=0),dict(name="-E",rep="d.d",size=1,angle=2),dict(name="C4",rep="d",size=6,angle=1),
    dict(name="C6",rep="c",size=4,angle=Fraction(2,3)),dict(name="C6^5",rep=pw('c',5),size=4,angle=Fraction(10,3)),
    dict(name="C3",rep="c.c",size=4,angle=Fraction(4,3)),dict(name="C3^2",rep=pw('c',4),size=4,angle=Fraction(8,3))]
o=lambda v: one(N,v)
ir={"A":("vector",[o(1)]*7),
    "1E":("vector",[o(1),o(1),o(1),w,w*w,w*w,w]),
    "2E":("vector",[o(1),o(1),o(1),w*w,w,w,w*w]),
    "T":("vector",[o(3),o(3),o(-1),o(0),o(0),o(0),o(0)]),
    "E_1/2":("spinor",[o(2),o(-2),o(0),o(1),o(1),o(-1),o(-1)]),
    "1F_3/2":("spinor",[o(2),o(-2),o(0),w,w*w,-w*w,-w]),
    "2F_3/2":("spinor",[o(2),o(-2),o(0),w*w,w,-w,-w*w])}
write("2T",12,[("c",c2),("d",dz)],cl,ir,"E_1/2",cover="T",comment="binary tetrahedral group, double cover of T")

N=3; o=lambda v: one(N,v)
c4=[[o(0),o(-1),o(0)],[o(1),o(0),o(0)],[o(0),o(0),o(1)]]
import numpy as _np
cl=[dict(name="E",rep="e",size=1,angle=0),dict(name="C2",rep="d.d",size=3,angle=1),dict(name="C2'",rep="c.d",size=6,angle=1),
    dict(name="C3",rep="c",size=8,angle=Fraction(2,3)),dict(name="C4",rep="d",size=6,angle=Fraction(1,2))]
ir={"A1":("vector",[o(1)]*5),"A2":("vector",[o(1),o(1),o(-1),o(1),o(-1)]),"E":("vector",[o(2),o(2),o(0),o(-1),o(0)]),
    "T1":("vector",[o(3),o(-1),o(-1),o(0),o(1)]),"T2":("vector",[o(3),o(-1),o(1),o(0),o(-1)])}
w3=Z(3,1)
neg=lambda M:[[-e for e in r] for r in M]
reps=[("A1",[("c",[[o(1)]]),("d",[[o(1)]])]),("A2",[("c",[[o(1)]]),("d",[[o(-1)]])]),
      ("E",[("c",[[w3,o(0)],[o(0),w3*w3]]),("d",[[o(0),o(1)],[o(1),o(0)]])]),
      ("T2",[("c",perm3(3)),("d",neg(c4))])]
oal=[("A1g","A1"),("A2g","A2"),("Eg","E"),("T1g","T1"),("T2g","T2"),("A1u","A1"),("A2u","A2"),("Eu","E"),("T1u","T1"),("T2u","T2"),
     ("F1","T1"),("F2","T2"),("F1g","T1"),("F2g","T2"),("F1u","T1"),("F2u","T2")]
write("O",3,[("c",perm3(3)),("d",c4)],cl,ir,"T1",reps=reps,aliases=oal,comment="octahedral rotation group")

N=8; o=lambda v: one(N,v); r2=sqrt2(N); h=F(N,sp.Rational(1,2))
c2=quat_spin(N,h,h,h,h); d4=[[Z(N,-1),o(0)],[o(0),Z(N,1)]]
cl=[dict(name="E",rep="e",size=1,angle=0),dict(name="-E",rep=pw('d',4),size=1,angle=2),dict(name="C8",rep="d",size=6,angle=Fraction(1,2)),
    dict(name="C8^3",rep="d.d.d",size=6,angle=Fraction(3,2)),dict(name="C4",rep="d.d",size=6,angle=1),
    dict(name="C6",rep="c",size=8,angle=Fraction(2,3)),dict(name="C3",rep="c.c",size=8,angle=Fraction(4,3)),dict(name="C4'",rep="c.d",size=12,angle=1)]
ir={"A1":("vector",[o(1)]*8),"A2":("vector",[o(1),o(1),o(-1),o(-1),o(1),o(1),o(1),o(-1)]),
    "E":("vector",[o(2),o(2),o(0),o(0),o(2),o(-1),o(-1),o(0)]),
    "T1":("vector",[o(3),o(3),o(1),o(1),o(-1),o(0),o(0),o(-1)]),
    "T2":("vector",[o(3),o(3),o(-1),o(-1),o(-1),o(0),o(0),o(1)]),
    "E_1/2":("spinor",[o(2),o(-2),r2,-r2,o(0),o(1),o(-1),o(0)]),
    "E_5/2":("spinor",[o(2),o(-2),-r2,r2,o(0),o(1),o(-1),o(0)]),
    "G_3/2":("spinor",[o(4),o(-4),o(0),o(0),o(0),o(-1),o(1),o(0)])}
write("2O",8,[("c",c2),("d",d4)],cl,ir,"E_1/2",cover="O",aliases=oal,comment="binary octahedral group, double cover of O")

# ---------------------------------------------------------------- icosahedral
N=5; o=lambda v: one(N,v); p=phi(N); h=F(N,sp.Rational(1,2))
tq=(p/2,(p-1)/2,h,o(0))
cl=[dict(name="E",rep="e",size=1,angle=0),dict(name="C2",rep=None,size=15,angle=1),dict(name="C3",rep=None,size=20,angle=Fraction(2,3)),
    dict(name="C5",rep=None,size=12,angle=Fraction(2,5)),dict(name="C5^2",rep=None,size=12,angle=Fraction(4,5))]
ivals={"A":[1,1,1,1,1],"T1":[3,-1,0,p,1-p],"T2":[3,-1,0,1-p,p],"G":[4,0,1,-1,-1],"H":[5,1,-1,0,0]}
gens_i=[("c",perm3(N)),("t",quat_rot(N,*tq))]
# find words for the C5 classes numerically
gn=[(l,nummat(m)) for l,m in gens_i]
els,words,idx,key=closure(gn)
for c in cl:
    if c['rep'] is None:
        th=math.pi*float(c['angle']); want=1+2*math.cos(th)
        cands=[('.'.join(wd) if wd else 'e') for e,wd in zip(els,words) if abs(np.trace(e)-want)<1e-9]
        c['rep']=min(cands,key=lambda s:(len(s),s))
ir={k:("vector",[lift(N,v) if not isinstance(v,F) else v for v in vs]) for k,vs in ivals.items()}
ial=[("1","A"),("3","T1"),("3'","T2"),("4","G"),("5","H")]
write("I",5,gens_i,cl,ir,"T1",aliases=ial,comment="icosahedral rotation group")

N=20; o=lambda v: one(N,v); p=phi(N); h=F(N,sp.Rational(1,2))
gens=[("c",quat_spin(N,h,h,h,h)),("t",quat_spin(N,p/2,(p-1)/2,h,o(0)))]
gn=[(l,nummat(m)) for l,m in gens]
els,words,idx,key=closure(gn)
layout=[("E",1,0),("-E",1,2),("C4",30,1),("C6",20,Fraction(2,3)),("C3",20,Fraction(4,3)),("C10",12,Fraction(2,5)),("C5",12,Fraction(4,5)),("C10^3",12,Fraction(6,5)),("C5^2",12,Fraction(8,5))]
cl=[]
for nm,sz,ang in layout:
    want=2*math.cos(math.pi*float(ang)/2)
    cands=[('.'.join(wd) if wd else 'e') for e,wd in zip(els,words) if abs(np.trace(e)-want)<1e-9 and (nm!='-E' or np.allclose(e,-np.eye(2)))]
    cl.append(dict(name=nm,rep=min(cands,key=lambda s:(len(s),s)),size=sz,angle=Fraction(ang)))
q=1-p
iv={"A":("vector",[1,1,1,1,1,1,1,1,1]),
    "T1":("vector",[3,3,-1,0,0,p,q,q,p]),
    "T2":("vector",[3,3,-1,0,0,q,p,p,q]),
    "G":("vector",[4,4,0,1,1,-1,-1,-1,-1]),
    "H":("vector",[5,5,1,-1,-1,0,0,0,0]),
    "E_1/2":("spinor",[2,-2,0,1,-1,p,p-1,1-p,-p]),
    "E_7/2":("spinor",[2,-2,0,1,-1,q,-p,p,p-1]),
    "G_3/2":("spinor",[4,-4,0,-1,1,1,-1,1,-1]),
    "I_5/2":("spinor",[6,-6,0,0,0,-1,1,-1,1])}
ir={k:(kind,[v if isinstance(v,F) else o(v) for v in vs]) for k,(kind,vs) in iv.items()}
ial+= [("2","E_1/2"),("2'","E_7/2"),("4'","G_3/2"),("6","I_5/2")]
write("2I",20,gens,cl,ir,"E_1/2",cover="I",aliases=ial,comment="binary icosahedral group, double cover of I")
