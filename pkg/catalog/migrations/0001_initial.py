# Generated by Django 4.2.8 on 2026-10-17 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('group', models.CharField(max_length=100, verbose_name='Группа')),
                ('order', models.PositiveIntegerField(verbose_name='Порядок группы')),
                ('prime', models.PositiveIntegerField(verbose_name='Простое p')),
                ('kind', models.CharField(choices=[('am', 'Делимость степеней (Альперин–Маккей)'), ('dim', 'Делимость размерностей блоков'), ('glauberman', 'Подъём соответствия Глаубермана'), ('navarro', 'Делимость индексов нормализаторов'), ('regular', 'Регулярный характер блока над нормальной подгруппой'), ('fong', 'Фонг и Фонг–Рейнольдс'), ('q35', 'Совместимость чисел разложения'), ('extension', 'Продолжение характеров O_p(G)')], max_length=20, verbose_name='Вид проверки')),
                ('verdict', models.CharField(choices=[('pass', 'Выполнено'), ('fail', 'Нарушено'), ('hypothesis-not-met', 'Гипотеза не выполнена'), ('inconclusive', 'Не определено')], max_length=20, verbose_name='Вердикт')),
                ('expected', models.CharField(blank=True, max_length=20, verbose_name='Ожидаемый тег')),
                ('matched', models.BooleanField(default=True, verbose_name='Вердикт совпал с ожиданием')),
                ('seed', models.IntegerField(default=0, verbose_name='Сид')),
                ('elapsed_ms', models.PositiveIntegerField(blank=True, null=True, verbose_name='Время, мс')),
                ('report', models.JSONField(default=dict, verbose_name='Отчёт')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Прогон проверки',
                'verbose_name_plural': 'Прогоны проверок',
                'ordering': ['-created_at', 'group', 'prime', 'kind'],
                'indexes': [models.Index(fields=['group', 'prime'], name='catalog_ver_group_3f1a2c_idx'), models.Index(fields=['kind', 'verdict'], name='catalog_ver_kind_8b7d41_idx')],
            },
        ),
    ]
