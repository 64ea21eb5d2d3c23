# Pin-Therien expansion via good-factorization signatures
from .signatures import (
    GoodFactClass, Signature, good_factorizations, signature, signature_product, check_product_oracle,
)
from .pin_therien import (
    DEFAULT_SIGNATURE_CAP, ExpansionResult, expand, regular_core_check, kernel_check,
    TowerResult, expansion_tower,
)

__all__ = [
    'GoodFactClass', 'Signature', 'good_factorizations', 'signature', 'signature_product',
    'check_product_oracle',
    'DEFAULT_SIGNATURE_CAP', 'ExpansionResult', 'expand', 'regular_core_check', 'kernel_check',
    'TowerResult', 'expansion_tower',
]
