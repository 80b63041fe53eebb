import django_filters

from .models import VerificationRun


class VerificationRunFilter(django_filters.FilterSet):
    """Фильтр журнала прогонов"""

    group = django_filters.CharFilter(lookup_expr='iexact')
    prime = django_filters.NumberFilter()
    kind = django_filters.ChoiceFilter(choices=VerificationRun.KINDS)
    verdict = django_filters.ChoiceFilter(choices=VerificationRun.VERDICTS)
    matched = django_filters.BooleanFilter()

    # Диапазон дат
    created_after = django_filters.DateTimeFilter(
        field_name='created_at',
        lookup_expr='gte'
    )
    created_before = django_filters.DateTimeFilter(
        field_name='created_at',
        lookup_expr='lte'
    )

    class Meta:
        model = VerificationRun
        fields = ['group', 'prime', 'kind', 'verdict', 'matched']
