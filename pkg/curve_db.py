#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
curve_db.py - Kurven-Datenbank für h10cert

Lädt curves.json: kuratierte Hilfskurven mit extern verifizierten Fakten
(Rang, Selmer-Verschwinden, Hypothese (*), Tamagawa-Zahlen bei 2 und 3)
und die Menge D der zulässigen Diskriminanten.

Kanonisches Format (schema_version 1):
    {"schema_version": 1, "d_set": [...], "curves": [{...}, ...]}
Jeder Eintrag hat genau die Felder in CURVE_FIELDS; Primzahl-Schlüssel
der Tamagawa-Maps sind Strings. Unbekannte oder fehlende Felder und
verletzte Invarianten verwerfen die ganze Datei.

Erstellt: 18.10.2026, 11:00
Modified: 18.10.2026, 15:30 - tamagawa_qmu3, bad_reduction und provenance ergänzt
"""

import json
import os
import threading
from dataclasses import dataclass, field

import config
from arith import (ArithError, is_fundamental_discriminant, is_squarefree,
                   prime_divisors)
from ec_model import (CurveError, REDUCTION_KINDS, ADDITIVE, GOOD, make_curve,
                      reduction_info, count_points_fp, is_good)

# Logger
logger = config.get_logger(__name__)

# =============================================================================
# Konstanten
# =============================================================================

SCHEMA_VERSION = 1

CURVE_FIELDS = (
    "label", "ainvs", "conductor", "rank_Q", "two_torsion_trivial",
    "three_torsion_over_Qmu3_trivial", "disc_sign", "tamagawa",
    "tamagawa_qmu3", "bad_reduction", "c2_odd", "mod2_image", "mod3_image",
    "selmer3_over_Qmu3_vanishes", "anomalous_at_3", "star_discriminants",
    "provenance"
)

MOD2_FULL = "Full"
MOD2_TRIVIAL = "Trivial"
MOD2_OTHER = "Other"
MOD2_TYPES = (MOD2_FULL, MOD2_TRIVIAL, MOD2_OTHER)

MOD3_FULL = "FullGL2"
MOD3_CM16 = "CM16"
MOD3_TYPES = (MOD3_FULL, MOD3_CM16)


class CurveDBError(Exception):
    """Fehler im Kurven-Datenbank Modul."""
    pass

# =============================================================================
# Datentypen
# =============================================================================

@dataclass(frozen=True)
class CurveRecord:
    """Kurve mit kuratierten, extern verifizierten Fakten."""
    label: str
    model: object
    conductor: int
    rank_Q: int
    two_torsion_trivial: bool
    three_torsion_over_Qmu3_trivial: bool
    disc_sign: str
    tamagawa: dict
    tamagawa_qmu3: dict
    bad_reduction: dict
    c2_odd: bool
    mod2_image: dict
    mod3_image: str
    selmer3_over_Qmu3_vanishes: bool
    anomalous_at_3: bool
    star_discriminants: tuple
    provenance: dict = field(default_factory=dict)

    @property
    def bad_primes(self):
        return sorted(self.tamagawa)

    def to_dict(self):
        """Kanonische Darstellung wie in curves.json."""
        return {
            "label": self.label,
            "ainvs": list(self.model.ainvs),
            "conductor": self.conductor,
            "rank_Q": self.rank_Q,
            "two_torsion_trivial": self.two_torsion_trivial,
            "three_torsion_over_Qmu3_trivial": self.three_torsion_over_Qmu3_trivial,
            "disc_sign": self.disc_sign,
            "tamagawa": {str(p): c for p, c in sorted(self.tamagawa.items())},
            "tamagawa_qmu3": {str(p): c for p, c in sorted(self.tamagawa_qmu3.items())},
            "bad_reduction": {str(p): k for p, k in sorted(self.bad_reduction.items())},
            "c2_odd": self.c2_odd,
            "mod2_image": dict(self.mod2_image),
            "mod3_image": self.mod3_image,
            "selmer3_over_Qmu3_vanishes": self.selmer3_over_Qmu3_vanishes,
            "anomalous_at_3": self.anomalous_at_3,
            "star_discriminants": list(self.star_discriminants),
            "provenance": dict(self.provenance)
        }


@dataclass(frozen=True)
class DSet:
    """Positive quadratfreie D, für die (*) bei Q(sqrt(-D)) geprüft wurde."""
    values: tuple

    def __contains__(self, D):
        return D in self.values

# =============================================================================
# Validierung
# =============================================================================

def _prime_map(raw, label, field_name):
    """Wandelt {"2": 1} in {2: 1} um."""
    if not isinstance(raw, dict):
        raise CurveDBError(f"{label}.{field_name} muss ein Objekt sein")
    result = {}
    for key, value in raw.items():
        try:
            p = int(key)
        except ValueError:
            raise CurveDBError(f"{label}.{field_name}: Schlüssel keine Primzahl: {key}")
        result[p] = value
    return result


def _require_bool(entry, name, label):
    if not isinstance(entry[name], bool):
        raise CurveDBError(f"{label}.{name} muss true/false sein")


def _build_record(entry):
    """
    Baut einen CurveRecord und prüft alle Invarianten.

    Raises:
        CurveDBError: bei jedem Verstoß
    """
    if not isinstance(entry, dict):
        raise CurveDBError("Kurven-Eintrag muss ein Objekt sein")

    label = entry.get("label", "?")
    unknown = set(entry) - set(CURVE_FIELDS)
    if unknown:
        raise CurveDBError(f"{label}: unbekannte Felder {sorted(unknown)}")
    missing = [name for name in CURVE_FIELDS if name not in entry]
    if missing:
        raise CurveDBError(f"{label}: fehlende Felder {missing}")

    for name in ("two_torsion_trivial", "three_torsion_over_Qmu3_trivial", "c2_odd",
                 "selmer3_over_Qmu3_vanishes", "anomalous_at_3"):
        _require_bool(entry, name, label)

    ainvs = entry["ainvs"]
    if not isinstance(ainvs, list) or len(ainvs) != 5 or not all(isinstance(a, int) for a in ainvs):
        raise CurveDBError(f"{label}.ainvs muss 5 ganze Zahlen enthalten")
    try:
        model = make_curve(*ainvs)
    except CurveError as e:
        raise CurveDBError(f"{label}: {e}")

    # Vorzeichen der Diskriminante
    sign = "+" if model.disc > 0 else "-"
    if entry["disc_sign"] != sign:
        raise CurveDBError(f"{label}: disc_sign {entry['disc_sign']} passt nicht zu Diskriminante {model.disc}")

    # Schlechte Primzahlen = Tamagawa-Schlüssel = Träger des Führers
    bad = prime_divisors(model.disc)
    tamagawa = _prime_map(entry["tamagawa"], label, "tamagawa")
    tamagawa_qmu3 = _prime_map(entry["tamagawa_qmu3"], label, "tamagawa_qmu3")
    bad_reduction = _prime_map(entry["bad_reduction"], label, "bad_reduction")
    for name, mapping in (("tamagawa", tamagawa), ("tamagawa_qmu3", tamagawa_qmu3),
                          ("bad_reduction", bad_reduction)):
        if sorted(mapping) != bad:
            raise CurveDBError(f"{label}.{name}: Schlüssel {sorted(mapping)} != schlechte Primzahlen {bad}")
    for name, mapping in (("tamagawa", tamagawa), ("tamagawa_qmu3", tamagawa_qmu3)):
        if not all(isinstance(c, int) and c >= 1 for c in mapping.values()):
            raise CurveDBError(f"{label}.{name}: Tamagawa-Zahlen müssen positive ganze Zahlen sein")

    conductor = entry["conductor"]
    if not isinstance(conductor, int) or conductor < 1:
        raise CurveDBError(f"{label}.conductor muss positiv sein")
    if prime_divisors(conductor) != bad:
        raise CurveDBError(f"{label}: Führer {conductor} hat nicht den Träger {bad}")

    for p, kind in bad_reduction.items():
        if kind not in REDUCTION_KINDS or kind == GOOD:
            raise CurveDBError(f"{label}.bad_reduction[{p}]: ungültiger Typ {kind}")
        # Multiplikativ genau dann, wenn p kein Teiler von c4 ist
        if (model.c4 % p == 0) != (kind == ADDITIVE):
            raise CurveDBError(f"{label}.bad_reduction[{p}] = {kind} widerspricht c4")

    # c2 ungerade
    c2 = tamagawa.get(2, 1)
    if entry["c2_odd"] != (c2 % 2 == 1):
        raise CurveDBError(f"{label}.c2_odd passt nicht zu Tamagawa-Zahl {c2} bei 2")

    # Bilder
    mod2 = entry["mod2_image"]
    if not isinstance(mod2, dict) or mod2.get("type") not in MOD2_TYPES:
        raise CurveDBError(f"{label}.mod2_image ungültig: {mod2}")
    if mod2["type"] == MOD2_FULL and not is_fundamental_discriminant(mod2.get("quad_disc", 0)):
        raise CurveDBError(f"{label}.mod2_image: quad_disc keine Fundamentaldiskriminante")
    if entry["mod3_image"] not in MOD3_TYPES:
        raise CurveDBError(f"{label}.mod3_image ungültig: {entry['mod3_image']}")

    # Diskriminanten mit Hypothese (*)
    stars = entry["star_discriminants"]
    if not isinstance(stars, list):
        raise CurveDBError(f"{label}.star_discriminants muss eine Liste sein")
    for d in stars:
        if not isinstance(d, int) or d >= 0 or not is_fundamental_discriminant(d):
            raise CurveDBError(f"{label}.star_discriminants: {d} nicht negativ fundamental")

    rank = entry["rank_Q"]
    if not isinstance(rank, int) or rank < 0:
        raise CurveDBError(f"{label}.rank_Q muss >= 0 sein")

    # anomal bei 3 nur prüfbar bei guter Reduktion
    if is_good(model, 3):
        anomalous = count_points_fp(model, 3) % 3 == 0
        if anomalous != entry["anomalous_at_3"]:
            raise CurveDBError(f"{label}.anomalous_at_3 widerspricht #E(F_3)")

    provenance = entry["provenance"]
    if not isinstance(provenance, dict) or not all(isinstance(v, str) for v in provenance.values()):
        raise CurveDBError(f"{label}.provenance muss Strings enthalten")

    record = CurveRecord(
        label=label,
        model=model,
        conductor=conductor,
        rank_Q=rank,
        two_torsion_trivial=entry["two_torsion_trivial"],
        three_torsion_over_Qmu3_trivial=entry["three_torsion_over_Qmu3_trivial"],
        disc_sign=sign,
        tamagawa=tamagawa,
        tamagawa_qmu3=tamagawa_qmu3,
        bad_reduction=bad_reduction,
        c2_odd=entry["c2_odd"],
        mod2_image=dict(mod2),
        mod3_image=entry["mod3_image"],
        selmer3_over_Qmu3_vanishes=entry["selmer3_over_Qmu3_vanishes"],
        anomalous_at_3=entry["anomalous_at_3"],
        star_discriminants=tuple(stars),
        provenance=dict(provenance)
    )

    # Multiplikative Typen bei p >= 3 gegen Berechnung prüfen
    for p, kind in bad_reduction.items():
        if kind != ADDITIVE and p != 2:
            computed = reduction_info(model, p, record).kind
            if computed != kind:
                raise CurveDBError(f"{label}.bad_reduction[{p}] = {kind}, berechnet {computed}")

    return record


def _build_d_set(raw):
    """Prüft die Menge D."""
    if not isinstance(raw, list):
        raise CurveDBError("d_set muss eine Liste sein")
    for D in raw:
        if not isinstance(D, int) or D <= 0 or not is_squarefree(D):
            raise CurveDBError(f"d_set: {D} nicht positiv quadratfrei")
        if not is_fundamental_discriminant(-D):
            raise CurveDBError(f"d_set: -{D} keine Fundamentaldiskriminante")
    if len(set(raw)) != len(raw):
        raise CurveDBError("d_set enthält Duplikate")
    return DSet(values=tuple(sorted(raw)))


def _parse_db(path):
    """
    Liest und validiert die Datenbank-Datei.

    Returns:
        (records, d_set)

    Raises:
        CurveDBError: Datei fehlt, JSON-Fehler, Schema- oder Invariantenverletzung
    """
    if not os.path.exists(path):
        raise CurveDBError(f"Kurven-Datenbank nicht gefunden: {path}")

    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise CurveDBError(f"JSON-Syntaxfehler in {path}: Zeile {e.lineno}, {e.msg}")

    if not isinstance(data, dict):
        raise CurveDBError("Datenbank muss ein Objekt sein")
    unknown = set(data) - {"schema_version", "d_set", "curves"}
    if unknown:
        raise CurveDBError(f"Unbekannte Felder in Datenbank: {sorted(unknown)}")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise CurveDBError(f"schema_version {data.get('schema_version')} nicht unterstützt")

    try:
        records = [_build_record(entry) for entry in data.get("curves", [])]
        d_set = _build_d_set(data.get("d_set", []))
    except ArithError as e:
        raise CurveDBError(f"Arithmetikfehler beim Prüfen: {e}")

    labels = [r.label for r in records]
    if len(set(labels)) != len(labels):
        raise CurveDBError("Doppelte Labels in Datenbank")

    logger.debug(f"Kurven-Datenbank geladen: {len(records)} Kurven, {len(d_set.values)} D-Werte")
    return records, d_set

# =============================================================================
# Öffentliche API
# =============================================================================

_db = None
_db_path = None
_db_lock = threading.Lock()


def load_db(path):
    """
    Lädt alle Kurven aus path.

    Returns:
        Liste von CurveRecord

    Raises:
        CurveDBError: siehe _parse_db
    """
    records, _ = _parse_db(path)
    return records


def _get_db(path=None):
    """Lädt die Datenbank einmal pro Pfad (lazy)."""
    global _db, _db_path
    path = path or config.get_curve_db_path()
    with _db_lock:
        if _db is None or _db_path != path:
            records, d_set = _parse_db(path)
            _db = ({r.label: r for r in records}, d_set)
            _db_path = path
        return _db


def current_path():
    """Pfad der aktiven Datenbank (config.json, sofern use_db nicht gerufen wurde)."""
    return _db_path or config.get_curve_db_path()


def use_db(path):
    """Setzt den Datenbank-Pfad für alle folgenden get()-Aufrufe (CLI --db)."""
    _get_db(path)
    return _db_path


def get(label, path=None):
    """
    Gibt den Eintrag zu label zurück.

    Raises:
        CurveDBError: unbekanntes Label
    """
    records, _ = _get_db(path or _db_path)
    if label not in records:
        raise CurveDBError(f"Unbekanntes Kurven-Label: {label}")
    return records[label]


def all_records(path=None):
    """Alle Einträge, sortiert nach Label."""
    records, _ = _get_db(path or _db_path)
    return [records[label] for label in sorted(records)]


def get_d_set(path=None):
    """Die Menge D aus der Datenbank."""
    _, d_set = _get_db(path or _db_path)
    return d_set
