# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``.

Same functions, same semantics, scalar C arithmetic throughout.  The
pure-Python module is the reference; equivalence is asserted by the test
suite whenever this extension is importable.
"""

from libc.math cimport atan2, cos, fabs, log, sin, sqrt

cdef double PI = 3.141592653589793
cdef double PI2_6 = PI * PI / 6.0
cdef double SERIES_RTOL = 1e-17
cdef int SERIES_CAP = 200

# B_k / (k+1)! for the log-argument series of the dilogarithm; generated
# from the exact Bernoulli recurrence (see the pure-Python twin)
cdef double[47] LOG_COEF
LOG_COEF = [
    1.0, -0.25, 0.027777777777777776,
    0.0, -0.0002777777777777778, 0.0,
    4.72411186696901e-06, 0.0, -9.185773074661964e-08,
    0.0, 1.8978869988971e-09, 0.0,
    -4.0647616451442256e-11, 0.0, 8.921691020456452e-13,
    0.0, -1.9939295860721074e-14, 0.0,
    4.518980029619918e-16, 0.0, -1.0356517612181247e-17,
    0.0, 2.395218621026187e-19, 0.0,
    -5.581785874325009e-21, 0.0, 1.3091507554183213e-22,
    0.0, -3.0874198024267403e-24, 0.0,
    7.315975652702203e-26, 0.0, -1.740845657234001e-27,
    0.0, 4.1576356446139e-29, 0.0,
    -9.962148488284622e-31, 0.0, 2.3940344248961652e-32,
    0.0, -5.76834735536739e-34, 0.0,
    1.393179479647008e-35, 0.0, -3.3721219654850894e-37,
    0.0, 8.178208777562102e-39,
]


cdef inline double _hypot2(double x, double y) nogil:
    return sqrt(x * x + y * y)


cdef int _li2_taylor(double x, double y, double* outr, double* outi) nogil:
    cdef double sr = x, si = y, pr = x, pi_ = y
    cdef double tr, ti, inv, bound
    cdef int n
    for n in range(2, SERIES_CAP + 1):
        tr = pr * x - pi_ * y
        ti = pr * y + pi_ * x
        pr = tr
        pi_ = ti
        inv = 1.0 / (<double> n * <double> n)
        tr = pr * inv
        ti = pi_ * inv
        sr += tr
        si += ti
        bound = SERIES_RTOL * (_hypot2(sr, si) + 1.0)
        if _hypot2(tr, ti) <= bound:
            outr[0] = sr
            outi[0] = si
            return 1
    outr[0] = sr
    outi[0] = si
    return 0


cdef int _li2_log_series(double ur, double ui, double* outr, double* outi) nogil:
    cdef double sr = ur, si = ui, pr = ur, pi_ = ui
    cdef double tr, ti, c, bound
    cdef int k
    for k in range(1, 47):
        tr = pr * ur - pi_ * ui
        ti = pr * ui + pi_ * ur
        pr = tr
        pi_ = ti
        c = LOG_COEF[k]
        if c == 0.0:
            continue
        tr = c * pr
        ti = c * pi_
        sr += tr
        si += ti
        bound = SERIES_RTOL * (_hypot2(sr, si) + 1.0)
        if _hypot2(tr, ti) <= bound:
            outr[0] = sr
            outi[0] = si
            return 1
    outr[0] = sr
    outi[0] = si
    return 0


cdef int _li2_small(double x, double y, double* outr, double* outi) nogil:
    cdef double wx, wy, ur, ui
    if x * x + y * y <= 0.25:
        return _li2_taylor(x, y, outr, outi)
    wx = 1.0 - x
    wy = -y
    ur = -0.5 * log(wx * wx + wy * wy)
    ui = -atan2(wy, wx)
    return _li2_log_series(ur, ui, outr, outi)


cdef int _li2_unit(double x, double y, double* outr, double* outi) nogil:
    cdef double wx, wy, sr, si, lzr, lzi, lwr, lwi
    cdef int ok
    if x > 0.5:
        wx = 1.0 - x
        wy = -y
        if wx == 0.0 and wy == 0.0:
            outr[0] = PI2_6
            outi[0] = 0.0
            return 1
        ok = _li2_small(wx, wy, &sr, &si)
        lzr = 0.5 * log(x * x + y * y)
        lzi = atan2(y, x)
        lwr = 0.5 * log(wx * wx + wy * wy)
        lwi = atan2(wy, wx)
        outr[0] = PI2_6 - (lzr * lwr - lzi * lwi) - sr
        outi[0] = -(lzr * lwi + lzi * lwr) - si
        return ok
    return _li2_small(x, y, outr, outi)


cdef int _li2_parts_c(double x, double y, double* outr, double* outi) nogil:
    cdef double r2, ir2, ur, ui, lr, li
    cdef int ok
    if x == 0.0 and y == 0.0:
        outr[0] = 0.0
        outi[0] = 0.0
        return 1
    r2 = x * x + y * y
    if r2 > 1.0:
        ir2 = 1.0 / r2
        ok = _li2_unit(x * ir2, -y * ir2, &ur, &ui)
        lr = 0.5 * log(r2)
        li = atan2(-y, -x)
        outr[0] = -ur - PI2_6 - 0.5 * (lr * lr - li * li)
        outi[0] = -ui - lr * li
        return ok
    return _li2_unit(x, y, outr, outi)


def li2_parts(double x, double y):
    """Principal-branch dilogarithm of x + iy as (re, im, converged); the
    sign of a zero imaginary part selects the boundary value on the cut."""
    cdef double re = 0.0, im = 0.0
    cdef int ok = _li2_parts_c(x, y, &re, &im)
    return re, im, ok != 0


cdef double _im_li2_path_c(double a, double c2, double s2) nogil:
    cdef double re = 0.0, im = 0.0
    if s2 == 0.0:
        if c2 < 0.0:
            if a > 1.0:
                return -PI * log(a)
            return 0.0
        return 0.0
    _li2_parts_c(-a * c2, -a * s2, &re, &im)
    return im


def im_li2_path(double a, double c2, double s2):
    """Im Li2(-a*(c2 + i*s2)) continued along the lower half-plane; at the
    cut endpoint (s2 == 0, c2 == -1) the boundary value from below."""
    return _im_li2_path_c(a, c2, s2)


cdef double _angular_primitive_c(double a, double c2, double s2, double log_term) nogil:
    cdef double two_phi = atan2(s2, c2)
    cdef double im2 = 2.0 * _im_li2_path_c(a, c2, s2)
    cdef double mid = (1.0 - a) * (1.0 + a) * (two_phi - atan2(a * s2, 1.0 + a * c2))
    cdef double tail
    if s2 == 0.0:
        tail = 0.0
    else:
        tail = a * (2.0 - log_term) * s2
    return im2 + mid + tail


def angular_primitive_core(double a, double c2, double s2, double log_term):
    """Primitive of -2*(1 + a*cos 2u)*(log(1+a^2+2a*cos 2u) - 1), with the
    interior logarithm supplied by the caller; zero at u = 0."""
    return _angular_primitive_c(a, c2, s2, log_term)


def cos_log_primitive_core(double a, double phi):
    """Primitive of -(1 - a*cos u)*(log(1+a^2-2a*cos u) - 1); zero at
    u = 0, continuous limit 0 at the a = 1, phi -> 0 corner."""
    cdef double c, s, half, w2, re, im, arc, tail
    if a == 1.0 and fabs(phi) < 1e-14:
        return 0.0
    c = cos(phi)
    s = sin(phi)
    half = sin(0.5 * phi)
    w2 = (1.0 - a) * (1.0 - a) + 4.0 * a * half * half
    re = 0.0
    im = 0.0
    _li2_parts_c(a * c, a * s, &re, &im)
    arc = atan2(a * s, 1.0 - a * c)
    if w2 < 1e-300:
        tail = 0.0
    else:
        tail = 2.0 * a * (0.5 * log(w2) - 1.0) * s
    return 2.0 * im + (1.0 - a) * (1.0 + a) * (phi + arc) + tail


cdef inline double _chord_c(double theta, double a) nogil:
    cdef double st = a * sin(theta)
    cdef double disc = 1.0 - st * st
    if disc < 0.0:
        disc = 0.0
    return -a * cos(theta) + sqrt(disc)


def chord_radius_core(double theta, double a):
    """Polar radius -a*cos(theta) + sqrt(1 - a^2 sin^2 theta), clamped."""
    return _chord_c(theta, a)


cdef double[7] XGK
XGK = [
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898,
]
cdef double[7] WGK
WGK = [
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298,
]
cdef double WGK_C = 0.209482141084728
cdef double[3] WG
WG = [0.129484966168870, 0.279705391489277, 0.381830050505119]
cdef double WG_C = 0.417959183673469


cdef inline double _wedge_f(double theta, double a) nogil:
    cdef double s = _chord_c(theta, a)
    cdef double t = s * s
    if t < 1e-300:
        return 0.0
    return t * (log(t) - 1.0)


cdef inline double _cos_log_f(double u, double a) nogil:
    cdef double c = cos(u)
    cdef double half = sin(0.5 * u)
    cdef double arg = (1.0 - a) * (1.0 - a) + 4.0 * a * half * half
    if arg < 1e-300:
        return 0.0
    return -(1.0 - a * c) * (log(arg) - 1.0)


def wedge_panel(double a, double lo, double hi):
    """15- and 7-point estimates of the integral of s^2*(log s^2 - 1)."""
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef double fc = _wedge_f(c, a)
    cdef double k = WGK_C * fc
    cdef double g = WG_C * fc
    cdef double fp, fm
    cdef int i
    for i in range(7):
        fp = _wedge_f(c + h * XGK[i], a)
        fm = _wedge_f(c - h * XGK[i], a)
        k += WGK[i] * (fp + fm)
        if i & 1:
            g += WG[(i - 1) >> 1] * (fp + fm)
    return k * h, g * h


def cos_log_panel(double a, double lo, double hi):
    """15- and 7-point estimates of the integral of
    -(1 - a*cos u)*(log(1+a^2-2a*cos u) - 1)."""
    cdef double c = 0.5 * (lo + hi)
    cdef double h = 0.5 * (hi - lo)
    cdef double fc = _cos_log_f(c, a)
    cdef double k = WGK_C * fc
    cdef double g = WG_C * fc
    cdef double fp, fm
    cdef int i
    for i in range(7):
        fp = _cos_log_f(c + h * XGK[i], a)
        fm = _cos_log_f(c - h * XGK[i], a)
        k += WGK[i] * (fp + fm)
        if i & 1:
            g += WG[(i - 1) >> 1] * (fp + fm)
    return k * h, g * h
