from django.db import models


class VerificationRun(models.Model):
    """Запись журнала: один вид проверки для пары (группа, p)"""

    KINDS = [
        ('am', 'Делимость степеней (Альперин–Маккей)'),
        ('dim', 'Делимость размерностей блоков'),
        ('glauberman', 'Подъём соответствия Глаубермана'),
        ('navarro', 'Делимость индексов нормализаторов'),
        ('regular', 'Регулярный характер блока над нормальной подгруппой'),
        ('fong', 'Фонг и Фонг–Рейнольдс'),
        ('q35', 'Совместимость чисел разложения'),
        ('extension', 'Продолжение характеров O_p(G)'),
    ]

    VERDICTS = [
        ('pass', 'Выполнено'),
        ('fail', 'Нарушено'),
        ('hypothesis-not-met', 'Гипотеза не выполнена'),
        ('inconclusive', 'Не определено'),
    ]

    group = models.CharField(max_length=100, verbose_name="Группа")
    order = models.PositiveIntegerField(verbose_name="Порядок группы")
    prime = models.PositiveIntegerField(verbose_name="Простое p")
    kind = models.CharField(max_length=20, choices=KINDS, verbose_name="Вид проверки")
    verdict = models.CharField(max_length=20, choices=VERDICTS, verbose_name="Вердикт")
    expected = models.CharField(max_length=20, blank=True, verbose_name="Ожидаемый тег")
    matched = models.BooleanField(default=True, verbose_name="Вердикт совпал с ожиданием")
    seed = models.IntegerField(default=0, verbose_name="Сид")
    elapsed_ms = models.PositiveIntegerField(null=True, blank=True, verbose_name="Время, мс")
    report = models.JSONField(default=dict, verbose_name="Отчёт")

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        verbose_name = "Прогон проверки"
        verbose_name_plural = "Прогоны проверок"
        ordering = ['-created_at', 'group', 'prime', 'kind']
        indexes = [
            models.Index(fields=['group', 'prime'], name='catalog_ver_group_3f1a2c_idx'),
            models.Index(fields=['kind', 'verdict'], name='catalog_ver_kind_8b7d41_idx'),
        ]

    def __str__(self):
        return f"{self.group} p={self.prime} {self.kind}: {self.verdict}"
