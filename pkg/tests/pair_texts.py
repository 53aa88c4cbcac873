"""Fixture corpus: Spanish administrative prose, before/after simplification pairs.

Each ``Pair`` holds an original fragment ("before"), its simplified rewrite
("after"), and the id of the rule whose finding motivated the rewrite. The
direction suite asserts that the motivating rule fires on the before text and
stays silent on the after text.

Texts are verbatim fragments of public Spanish Social Security web prose and
their plain-language rewrites; block structure (paragraph breaks, list items)
is encoded the same way the plain-text parser reads it.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Pair:
    rule_id: str
    before: str
    after: str
    profile: str = "lengclaro"


A1_BEFORE = (
    "La Seguridad Social limita en todo caso el acceso y utilización de los "
    "datos personales.\n\n"
    "Además, las víctimas de violencia contra la mujer pueden solicitar, a "
    "través de nuestras Oficinas de la Seguridad Social, que el acceso a sus "
    "datos queden especialmente limitado y controlado."
)

A1_AFTER = (
    "La Seguridad Social limita en todo caso que se acceda y utilicen los "
    "datos personales. Además, las víctimas de violencia contra la mujer "
    "pueden solicitar que el acceso a sus datos quede especialmente limitado "
    "y controlado. Esto pueden solicitarlo a través de nuestras Oficinas de "
    "la Seguridad Social."
)

A2_BEFORE = (
    "En todo caso, e independientemente de cuáles hubieran sido las rentas e "
    "ingresos del ejercicio anterior de la persona que vive sola o de la "
    "unidad de convivencia, cuando el solicitante del ingreso mínimo vital o "
    "uno o varios de los miembros de la unidad de convivencia, en su caso, "
    "tuvieran reconocida en la fecha de la solicitud, o les fuera reconocida "
    "antes de la resolución, una o más pensiones, contributivas o no "
    "contributivas, del sistema de la Seguridad Social, o un subsidio de "
    "desempleo para mayores de 52 años, cuyo importe mensual conjunto, "
    "incluida la parte proporcional de pagas extraordinarias, fuera inferior "
    "a la cuantía mensual de renta garantizada aplicable, y procediera el "
    "reconocimiento del ingreso mínimo vital por concurrir todos los "
    "requisitos para ello, el importe mensual de esta prestación no podrá "
    "ser superior a la diferencia entre la referida cuantía mensual de la "
    "renta garantizada y el importe mensual de la pensión o de la suma de "
    "las pensiones, incluida en su caso la parte proporcional de las pagas "
    "extraordinarias."
)

A2_AFTER = (
    "Es posible que al solicitante del IMV o miembro de una unidad de "
    "convivencia se le reconozca una asignación económica antes de "
    "resolverse la solicitud. Puede tratarse de un subsidio de desempleo "
    "para mayores de 52 años o una pensión, contributiva o no contributiva, "
    "de la Seguridad Social. Si esto ocurre, su importe mensual, incluida la "
    "parte proporcional de pagas extraordinarias, contará para el cálculo de "
    "los ingresos mensuales conjuntos. Esto se hará independientemente de "
    "las rentas e ingresos del ejercicio anterior. Por tanto, el importe "
    "mensual del IMV será la diferencia entre la cuantía mensual de renta "
    "garantizada aplicable y el importe mensual conjunto, incluidas las "
    "pensiones."
)

A4_BEFORE = (
    "Para las prestaciones por Incapacidad Temporal en pago directo del "
    "INSS, Nacimiento y cuidado de menor, Riesgo durante el embarazo, Riesgo "
    "durante la lactancia natural y Cuidado de menores afectados por cáncer "
    "u otra enfermedad grave, este certificado integral de prestaciones, "
    "sólo mostrará los datos relativos al certificado de IRPF."
)

A4_AFTER = (
    "Este certificado integral de prestaciones sólo mostrará los datos "
    "relativos al certificado de IRPF para las siguientes prestaciones:\n"
    "- Incapacidad Temporal en pago directo del Instituto Nacional de la "
    "Seguridad Social (INSS)\n"
    "- Nacimiento y cuidado de menor\n"
    "- Riesgo durante el embarazo\n"
    "- Riesgo durante la lactancia natural\n"
    "- Cuidado de menores afectados por cáncer u otra enfermedad grave"
)

A5_BEFORE = (
    "Este servicio permite solicitar la prestación por Nacimiento y Cuidado "
    "de Menor, para disfrutar del periodo de descanso laboral "
    "correspondiente, por nacimiento, adopción, guarda con fines de adopción "
    "y acogimiento permanente o temporal."
)

A5_AFTER = (
    "Este servicio permite solicitar la prestación por Nacimiento y Cuidado "
    "de Menor. Con ella se podrá disfrutar del periodo de descanso laboral "
    "correspondiente, por nacimiento, adopción, guarda con fines de adopción "
    "y acogimiento permanente o temporal."
)

B1_BEFORE = (
    "Los requisitos de ingresos y patrimonio para el acceso y mantenimiento "
    "de la prestación económica de IMV se realizará por la entidad gestora "
    "conforme a la información que se obtenga por medios telemáticos de la "
    "Agencia Estatal de Administración Tributaria y en las Haciendas "
    "Tributarias Forales de Navarra y de los territorios históricos del "
    "País Vasco"
)

B1_AFTER = (
    "Los requisitos de ingresos y patrimonio. Para acreditarlos, la entidad "
    "gestora recurrirá a la Agencia Estatal de Administración Tributaria y a "
    "las Haciendas Tributarias Forales de Navarra y de los territorios "
    "históricos del País Vasco."
)

# Exact-count passive fixtures: the proof-of-life paragraph carries one
# "deberá ser presentada" (auxiliary periphrasis) and one "ha sido comunicada"
# (plain periphrastic); the second fragment carries one reflexive passive
# with an explicit agent.
B1_PROOF_OF_LIFE = (
    "La fe de vida deberá ser presentada en la Dirección Provincial del INSS "
    "que gestiona su pensión, información que ha sido comunicada a los "
    "pensionistas en la notificación de la revalorización de la pensión, "
    "durante el primer trimestre de cada año."
)

B1_REFLEXIVE_AGENT = "se realizará por la entidad gestora"

B2_BEFORE = (
    "Se considerará pareja de hecho, a estos efectos, la constituida con "
    "análoga relación de afectividad a la conyugal con al menos dos años de "
    "antelación, por quienes, no hallándose impedidos para contraer "
    "matrimonio, no tengan vínculo matrimonial con otra persona y hayan "
    "convivido de forma estable y notoria con carácter inmediato a la "
    "solicitud de la prestación y con una duración ininterrumpida no "
    "inferior a cinco años."
)

B2_AFTER = (
    "Para considerarse pareja de hecho, a estos efectos, se requiere una "
    "relación de afectividad análoga a la conyugal con al menos dos años de "
    "antelación. Las personas que conformen la pareja no deben hallarse "
    "impedidas para contraer matrimonio, ni tener vínculo matrimonial con "
    "otra persona. Además, deben haber convivido de forma estable, notoria e "
    "ininterrumpida durante al menos los cinco años anteriores a la "
    "solicitud de la prestación."
)

B3_BEFORE = (
    "Finalizado el proceso de cumplimentación se le indicará los documentos "
    "que debe presentar y tendrá la posibilidad de adjuntarlos "
    "electrónicamente."
)

B3_AFTER = (
    "Cuando usted finalice el proceso de cumplimentación, se le indicarán "
    "los documentos que debe presentar y tendrá la posibilidad de "
    "adjuntarlos electrónicamente"
)

B4_BEFORE = (
    "La inexistencia de vínculos de parentesco entre todos o parte de los "
    "convivientes cuando uno de ellos solicitare el ingreso mínimo vital."
)

B4_AFTER = (
    "La inexistencia de vínculos de parentesco entre todos o parte de los "
    "convivientes cuando uno de ellos solicitase el IMV."
)

# The nominalization rule under the lengclaro profile restricts findings to
# nouns carrying a "de" complement, so the pair exercises exactly that shape;
# the rewrite applies the rule's own suggestion (noun -> verb).
B6_BEFORE = "La utilización de este servicio es totalmente gratuita."

B6_AFTER = "Utilizar este servicio es totalmente gratuito."

# Under the artext profile every non-excluded "-ción" noun is reported, so the
# original long-sentence fragment works as a direction pair there.
B6_BEFORE_ARTEXT = (
    "La residencia legal en España se acreditará mediante la inscripción en "
    "el registro central de extranjeros, en el caso de nacionales de los "
    "Estados miembros de la Unión Europea, Espacio Económico Europeo o la "
    "Confederación Suiza, o con tarjeta de familiar de ciudadano de la Unión "
    "o autorización de residencia, en cualquiera de sus modalidades, en el "
    "caso de extranjeros de otra nacionalidad."
)

B6_AFTER_ARTEXT = (
    "La residencia legal en España se acreditará:\n"
    "- En el caso de nacionales de los Estados miembros de la Unión Europea, "
    "Espacio Económico Europeo o la Confederación Suiza, al inscribirse en "
    "el registro central de extranjeros.\n"
    "- En el caso de extranjeros de otra nacionalidad, mediante la tarjeta "
    "de familiar de ciudadano de la Unión o autorización de residencia, en "
    "cualquiera de sus modalidades"
)

B7_BEFORE = (
    "Los datos introducidos en el formulario deben coincidir con los "
    "existentes en nuestras bases de datos. Si no son coincidentes, no será "
    "posible obtener el certificado."
)

B7_AFTER = (
    "Los datos que introduzcas en el formulario deben coincidir con los "
    "existentes en nuestras bases de datos para que sea posible obtener el "
    "certificado."
)

B9_BEFORE = (
    "Mejora del porcentaje de la pensión de orfandad absoluta, que pasa del "
    "52% anterior al 70% en los casos de carencia de rentas (rendimientos "
    "inferiores al 75% del salario mínimo interprofesional) de los miembros "
    "de la unidad familiar de convivencia; e incremento del conjunto de "
    "pensiones de orfandad en el caso de existencia de varios beneficiarios, "
    "al permitirse alcanzar el 118% de la base reguladora (hasta entonces "
    "era el 100%) y establecerse una garantía de importe mínimo conjunto."
)

B9_AFTER = (
    "Mejora el porcentaje de la pensión de orfandad absoluta:\n"
    "- En los casos de carencia de rentas, este porcentaje pasa del 52% al "
    "70%. Se considera carencia de rentas cuando los rendimientos de las "
    "personas integrantes de la unidad de convivencia sean inferiores al "
    "75% del salario mínimo interprofesional.\n"
    "- Cuando haya más de una persona beneficiaria, se incrementa el "
    "conjunto de pensiones de orfandad. Dado este caso, se permite alcanzar "
    "el 118% de la base reguladora, que antes era el 100%. Además, se "
    "establece una garantía de importe mínimo conjunto."
)

C9_BEFORE = (
    "El acceso al servicio podrá hacerse con cualquier sistema de "
    "identificación válido. Con este acceso accederá a la simulación de la "
    "prestación teniendo en cuenta la información que incorpore."
)

C9_AFTER = (
    "Para realizar la simulación necesitas:\n"
    "- Acceder al servicio con un sistema de identificación válido.\n"
    "- Proporcionar la información y documentos que se requieran."
)

DIRECTION_PAIRS: tuple[Pair, ...] = (
    Pair("a1", A1_BEFORE, A1_AFTER),
    Pair("a2", A2_BEFORE, A2_AFTER),
    Pair("a4", A4_BEFORE, A4_AFTER),
    Pair("a5", A5_BEFORE, A5_AFTER),
    Pair("b1", B1_BEFORE, B1_AFTER),
    Pair("b2", B2_BEFORE, B2_AFTER),
    Pair("b3", B3_BEFORE, B3_AFTER),
    Pair("b4", B4_BEFORE, B4_AFTER),
    Pair("b6", B6_BEFORE, B6_AFTER),
    Pair("b7", B7_BEFORE, B7_AFTER),
    Pair("b9", B9_BEFORE, B9_AFTER),
    Pair("c9", C9_BEFORE, C9_AFTER),
)

EXTRA_PAIRS: tuple[Pair, ...] = (
    Pair("b6", B6_BEFORE_ARTEXT, B6_AFTER_ARTEXT, profile="artext"),
)

# Other verbatim fragments reused across the suites.
C1_SENTENCE = (
    "El funcionamiento de la APP es muy sencillo, y en tres pasos se podrá "
    "cumplir con el trámite de acreditación de la vivencia sin "
    "desplazamientos:"
)

C1_REWRITE = "Para utilizar la aplicación móvil debes seguir los siguientes pasos:"

LIST_INTRO_BLOCK = (
    "Para obtener un certificado:\n"
    "- Una vez identificado, podrás obtener el certificado pulsando en el "
    "enlace \"Certificado integral de prestaciones\".\n"
    "- Disponer del software para descargar/imprimir el certificado "
    "(archivo PDF).\n"
    "- Si accede como representante, debe solicitar al representado que "
    "confirme la representación accediendo al enlace que recibirá en su "
    "móvil por SMS.\n"
    "- Si accede como apoderado, deberá estar inscrito en el Registro "
    "Electrónico de Apoderamientos."
)
