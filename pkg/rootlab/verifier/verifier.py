"""Проверка классификации: P* является зоноэдром ровно для A_n, C_n, B3 и G2.

Каждая проверка возвращает VerificationReport; отчёт получает статус
pass, только если выполнено каждое точное равенство из его checks.
"""
import logging
import random
from fractions import Fraction
from typing import Dict, List, Tuple

from polytopes.polar import (arrangement_normals, cutting_pairs,
                             hyperplane_cuts_facet, is_centrally_symmetric,
                             polar_vertices, standard_facet,
                             standard_hyperplane_indices)
from polytopes.zonotopes import (brute_force_support, congruence_holds,
                                 contained_in_polar, generator_scale,
                                 orbit_zonotope, sign_gap_holds,
                                 telescoping_certificate, telescoping_words,
                                 theta_level_count,
                                 zt_equals_polar, zt_support)
from roots import exactlin as el
from roots.conf import rootlab_settings
from roots.exceptions import (InvalidRank, NotAZonotopeType, RankTooLarge,
                              RootLabError)
from roots.rootsys import (RootSystem, TypeLabel, build_root_system,
                           length_ratio, parabolic_highest_root)
from roots.weyl import (WeylWord, apply_word, check_coset_minimality,
                        check_product_formulas, inversion_set,
                        inversion_set_by_definition,
                        minimal_coset_representatives, orbit, q_index,
                        reflect)

from .reports import VerificationReport, error_report, make_report, timed
from .witnesses import witness_row

logger = logging.getLogger(__name__)

ZONOTOPE = 'zonotope'
NON_ZONOTOPE = 'non-zonotope'
LEMMAS = 'lemmas'


def canonical_label(family: str, rank: int) -> TypeLabel:
    """Метка типа; B2 проверяется как C2."""
    label = TypeLabel(family.upper(), int(rank))
    if label == TypeLabel('B', 2):
        return TypeLabel('C', 2)
    return label


def is_zonotope_type(label: TypeLabel) -> bool:
    return generator_scale(build_root_system(label)) is not None


def _log_result(report: VerificationReport) -> VerificationReport:
    logger.info('%s: %s', report.clause, report.status)
    return report


def _telescoping(rs: RootSystem) -> Tuple[bool, Dict]:
    try:
        images = [telescoping_certificate(rs, k) for k in range(rs.rank)]
    except RootLabError as error:
        return False, {'error': str(error)}
    return True, {'words': telescoping_words(rs.rank - 1),
                  'images': images[-1]}


@timed
def verify_zonotope_case(family: str, rank: int) -> VerificationReport:
    """P* = ZT(W·c·ω_j^∨) с известными j и c."""
    label = canonical_label(family, rank)
    rs = build_root_system(label)
    known = generator_scale(rs)
    if known is None:
        raise NotAZonotopeType(f'P* для {label} не является зоноэдром.')
    j, c = known
    equality = zt_equals_polar(rs, j, c)
    zonotope = orbit_zonotope(rs, j, c)
    q_j, m_j = q_index(rs, j), rs.m[j - 1]
    support = zt_support(orbit_zonotope(rs, j), rs.theta)
    checks = {
        'contained_in_polar': equality.containment.contained,
        'vertices_certified': equality.reverse_inclusion,
        'certificates_verified': all(
            certificate.verify(zonotope)
            for certificate in equality.certificates.values()
        ),
        'supporting_hyperplane': support == q_j * m_j,
        'scale_is_threshold': equality.threshold == c,
        'centered_at_origin': zonotope.is_centered_at_origin(),
    }
    witnesses = {
        'label': label,
        'j': j,
        'scale': c,
        'generators': zonotope.generators,
        'support_along_theta': support,
        'q_j': q_j,
        'm_j': m_j,
        'certificates': {
            i: {'method': certificate.method,
                'subset': certificate.subset,
                'coefficients': certificate.coefficients}
            for i, certificate in sorted(equality.certificates.items())
        },
        'missing': equality.missing,
    }
    if rs.family in ('A', 'C'):
        checks['telescoping'], witnesses['telescoping'] = _telescoping(rs)
    if rs.rank <= rootlab_settings.ARRANGEMENT_MAX_RANK:
        pairs = cutting_pairs(rs)
        checks['no_cutting_pairs'] = not pairs
        witnesses['cutting_pairs'] = len(pairs)
    return _log_result(make_report(f'{ZONOTOPE}/{label}', checks, witnesses))


@timed
def verify_nonzonotope_case(family: str, rank: int) -> VerificationReport:
    """Строка таблицы: w(ω_i) ⊥ ω_k^∨ и разрез гиперграни F_i."""
    label = canonical_label(family, rank)
    rs = build_root_system(label)
    row = witness_row(label)
    i, k = row.facet_index, row.hyperplane_index
    omega = rs.weights[i - 1]
    image = apply_word(rs, row.word, omega)
    normal = apply_word(rs, row.word.inverse(), rs.coweights[k - 1])
    facet = standard_facet(rs, i)
    cut = hyperplane_cuts_facet(rs, normal, facet)
    checks = {
        'orthogonal': rs.pair(image, rs.coweights[k - 1]) == 0,
        'weight_on_hyperplane': rs.pair(omega, normal) == 0,
        'barycenter_on_hyperplane': cut.through_barycenter,
        'mixed_signs': cut.mixed_signs,
        'root_polytope_symmetric': is_centrally_symmetric(rs.roots),
        'polar_symmetric': is_centrally_symmetric(rs.long_roots),
        'orbit_zonotope_centered':
            orbit_zonotope(rs, k).is_centered_at_origin(),
    }
    witnesses = {
        'label': label,
        'facet_index': i,
        'hyperplane_index': k,
        'word': row.word,
        'image': image,
        'normal': normal,
        'barycenter': facet.barycenter,
        'weight_multiple': facet.weight_multiple,
        'cut': {
            'positive': len(cut.positive),
            'negative': len(cut.negative),
            'on_hyperplane': len(cut.on_hyperplane),
        },
    }
    flags = []

    expected = row.expected_image(rs)
    if expected is not None:
        checks['expected_image'] = image == expected
        witnesses['expected_image'] = expected
    if row.stated_weight is not None and row.stated_weight != omega:
        flags.append(
            f'ω_{i} в таблице равен {el.format_vector(row.stated_weight)}, '
            f'вычислено {el.format_vector(omega)}')
    if row.inner_block is not None:
        start = apply_word(rs, WeylWord(row.word.letters[-1:]), omega)
        sub_theta = parabolic_highest_root(rs, row.inner_indices)
        checks['inner_block'] = apply_word(
            rs, row.inner_block, start) == el.sub(omega, sub_theta)
        witnesses['inner_highest_root'] = sub_theta

    standard = standard_hyperplane_indices(rs)
    if k not in standard:
        flags.append(f'k = {k} не входит в H_Φ = {standard}')
    if rs.rank <= rootlab_settings.ARRANGEMENT_MAX_RANK:
        in_arrangement = normal in arrangement_normals(rs)
        if k in standard:
            checks['in_arrangement'] = in_arrangement
        witnesses['in_arrangement'] = in_arrangement
        pairs = len(cutting_pairs(rs))
        witnesses['cutting_pairs'] = pairs
        if k not in standard and not pairs:
            flags.append(
                'ни одна гиперплоскость H_Φ не разрезает стандартную '
                'гипергрань; разрез даёт только w⁻¹(ω_k^∨)^⊥')
        checks['polar_vertices_symmetric'] = is_centrally_symmetric(
            polar_vertices(rs))
    else:
        witnesses['in_arrangement'] = None
        witnesses['cutting_pairs'] = None

    for flag in flags:
        logger.warning('%s: %s', label, flag)
    witnesses['flags'] = flags
    if row.notes:
        witnesses['notes'] = row.notes
    return _log_result(
        make_report(f'{NON_ZONOTOPE}/{label}', checks, witnesses))


def _random_point(rng: random.Random, rank: int):
    return tuple(
        Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(rank))


def _formula_suite(rs: RootSystem, rng: random.Random) -> Tuple[bool, int]:
    """Разложения w(x) через ν_i и η_i на случайных словах из корней."""
    pairs, holds = 0, True
    for _ in range(rootlab_settings.LEMMA_WORDS_PER_SYSTEM):
        length = rng.randint(1, rootlab_settings.LEMMA_WORD_MAX_LENGTH)
        word = WeylWord(tuple(rng.choice(rs.roots) for _ in range(length)))
        for _ in range(rootlab_settings.LEMMA_POINTS_PER_WORD):
            holds &= check_product_formulas(
                rs, word, _random_point(rng, rs.rank))
            pairs += 1
    return holds, pairs


def _reflection_suite(rs: RootSystem, rng: random.Random) -> bool:
    for _ in range(rootlab_settings.LEMMA_WORDS_PER_SYSTEM):
        beta = rng.choice(rs.roots)
        x, y = _random_point(rng, rs.rank), _random_point(rng, rs.rank)
        sx, sy = reflect(rs, beta, x), reflect(rs, beta, y)
        if reflect(rs, beta, sx) != x or rs.pair(sx, sy) != rs.pair(x, y):
            return False
    return True


def _inversion_suite(rs: RootSystem, rng: random.Random) -> bool:
    for _ in range(rootlab_settings.LEMMA_WORDS_PER_SYSTEM):
        length = rng.randint(0, rootlab_settings.LEMMA_WORD_MAX_LENGTH)
        word = WeylWord(tuple(
            rng.choice(rs.simple_indices) for _ in range(length)))
        if inversion_set(rs, word).roots != \
                inversion_set_by_definition(rs, word):
            return False
    return True


def _coset_suite(rs: RootSystem, j: int, rng: random.Random) -> int:
    """Число проверенных минимальных представителей или -1 при нарушении."""
    representatives = [
        word for word, _ in minimal_coset_representatives(rs, j) if word]
    limit = rootlab_settings.LEMMA_WORDS_PER_SYSTEM
    if len(representatives) > limit:
        representatives = rng.sample(representatives, limit)
    for word in representatives:
        if not all(check_coset_minimality(rs, j, word).values()):
            return -1
    return len(representatives)


def _support_suite(rs: RootSystem, j: int) -> Tuple[Dict[str, bool], Dict]:
    """Опорная гиперплоскость вдоль θ и точность порога масштаба."""
    q_j, m_j = q_index(rs, j), rs.m[j - 1]
    zonotope = orbit_zonotope(rs, j)
    support = zt_support(zonotope, rs.theta)
    threshold = Fraction(1, q_j * m_j)
    checks = {
        'support': support == q_j * m_j,
        'sign_gap': sign_gap_holds(rs, j),
        'threshold_contained': contained_in_polar(
            rs, orbit_zonotope(rs, j, threshold)).contained,
        'above_threshold_rejected': not contained_in_polar(
            rs, orbit_zonotope(
                rs, j, threshold + rootlab_settings.SCALE_EPSILON)
        ).contained,
    }
    if len(zonotope.generators) <= rootlab_settings.BRUTE_FORCE_SUPPORT_MAX:
        directions = (rs.theta,) + tuple(
            rs.simple_root(i) for i in rs.simple_indices)
        checks['brute_force_support'] = all(
            zt_support(zonotope, d) == brute_force_support(zonotope, d)
            for d in directions
        )
    return checks, {'support': support, 'threshold': threshold}


def lemma_checks(rs: RootSystem) -> Tuple[Dict[str, bool], Dict]:
    """Все структурные свойства для одной системы корней."""
    rng = random.Random(f'{rootlab_settings.RANDOM_SEED}:{rs.label}')
    formulas, pairs = _formula_suite(rs, rng)
    checks = {
        'product_formulas': formulas,
        'reflections': _reflection_suite(rs, rng),
        'inversion_sets': _inversion_suite(rs, rng),
    }
    witnesses = {
        'label': rs.label,
        'formula_pairs': pairs,
        'm': rs.m,
        'q': {}, 'r': {}, 'theta_level_counts': {},
        'supports': {}, 'coset_words': {},
    }
    for j in rs.simple_indices:
        q_j, r_j = q_index(rs, j), length_ratio(rs, j)
        level_count = theta_level_count(rs, j)
        witnesses['q'][j] = q_j
        witnesses['r'][j] = r_j
        witnesses['theta_level_counts'][j] = level_count
        checks[f'congruence_{j}'] = congruence_holds(rs, j)
        checks[f'orbit_count_{j}'] = level_count == q_j
        checks[f'orbit_sum_{j}'] = el.is_zero(
            orbit(rs, rs.coweights[j - 1]).total())
        checked = _coset_suite(rs, j, rng)
        checks[f'coset_minimality_{j}'] = checked >= 0
        witnesses['coset_words'][j] = checked
        if r_j == rs.m[j - 1]:
            support_checks, support = _support_suite(rs, j)
            checks.update(
                (f'{name}_{j}', value)
                for name, value in support_checks.items())
            witnesses['supports'][j] = support
    return checks, witnesses


def _check_lemma_rank(label: TypeLabel):
    if label.rank > rootlab_settings.LEMMA_MAX_RANK and \
            label != TypeLabel('E', 6):
        raise RankTooLarge(
            f'Структурные свойства для {label} не проверяются: '
            f'ранг больше {rootlab_settings.LEMMA_MAX_RANK}.')


@timed
def verify_structure_lemmas(family: str, rank: int) -> VerificationReport:
    label = canonical_label(family, rank)
    _check_lemma_rank(label)
    checks, witnesses = lemma_checks(build_root_system(label))
    return _log_result(make_report(f'{LEMMAS}/{label}', checks, witnesses))


def lemma_labels(max_rank: int) -> List[TypeLabel]:
    bound = min(rootlab_settings.LEMMA_MAX_RANK, max_rank)
    labels = [TypeLabel('A', n) for n in range(1, bound + 1)]
    labels += [TypeLabel('B', n) for n in range(3, bound + 1)]
    labels += [TypeLabel('C', n) for n in range(2, bound + 1)]
    labels += [TypeLabel('D', n) for n in range(4, bound + 1)]
    if bound >= 4:
        labels.append(TypeLabel('F', 4))
    if bound >= 2:
        labels.append(TypeLabel('G', 2))
    return labels


@timed
def verify_lemma_suite(max_rank: int) -> VerificationReport:
    """Сводный отчёт структурных свойств для всех систем малого ранга."""
    bound = min(rootlab_settings.LEMMA_MAX_RANK, max_rank)
    checks, systems, pairs = {}, {}, 0
    for label in lemma_labels(max_rank):
        try:
            sub_checks, sub_witnesses = lemma_checks(build_root_system(label))
        except RootLabError as error:
            checks[str(label)] = False
            systems[str(label)] = {'error': type(error).__name__,
                                   'message': str(error)}
            continue
        checks[str(label)] = all(sub_checks.values())
        pairs += sub_witnesses['formula_pairs']
        systems[str(label)] = {'checks': sub_checks, **sub_witnesses}
    witnesses = {'formula_pairs': pairs, 'systems': systems}
    return _log_result(
        make_report(f'{LEMMAS}/rank<={bound}', checks, witnesses))


def zonotope_cases(max_rank: int) -> List[TypeLabel]:
    labels = [TypeLabel('A', n) for n in range(1, max_rank + 1)]
    labels += [TypeLabel('C', n) for n in range(2, max_rank + 1)]
    if max_rank >= 3:
        labels.append(TypeLabel('B', 3))
    if max_rank >= 2:
        labels.append(TypeLabel('G', 2))
    return labels


def nonzonotope_cases(max_rank: int) -> List[TypeLabel]:
    labels = [TypeLabel('B', n) for n in range(4, max_rank + 1)]
    labels += [TypeLabel('D', n) for n in range(4, max_rank + 1)]
    labels += [TypeLabel('E', n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        labels.append(TypeLabel('F', 4))
    return labels


def _guarded(check, kind: str, label: TypeLabel,
             timings: bool) -> VerificationReport:
    try:
        return check(label.family, label.rank, timings=timings)
    except RootLabError as error:
        logger.error('%s/%s: %s', kind, label, error)
        return error_report(f'{kind}/{label}', error)


def verify_case(label: TypeLabel, timings: bool = False) -> VerificationReport:
    """Проверка одного типа: зоноэдр или строка таблицы."""
    label = canonical_label(label.family, label.rank)
    if is_zonotope_type(label):
        return _guarded(verify_zonotope_case, ZONOTOPE, label, timings)
    return _guarded(verify_nonzonotope_case, NON_ZONOTOPE, label, timings)


def run_all(max_rank: int, timings: bool = False) -> List[VerificationReport]:
    """Все случаи до ранга max_rank и сводный отчёт структурных свойств."""
    if not isinstance(max_rank, int) or max_rank < 1:
        raise InvalidRank(f'max_rank = {max_rank} должен быть не меньше 1.')
    reports = [
        _guarded(verify_zonotope_case, ZONOTOPE, label, timings)
        for label in zonotope_cases(max_rank)
    ]
    reports += [
        _guarded(verify_nonzonotope_case, NON_ZONOTOPE, label, timings)
        for label in nonzonotope_cases(max_rank)
    ]
    reports.append(verify_lemma_suite(max_rank, timings=timings))
    return reports
