"""Extremal witnesses: n circles with exactly 2n - 2 digons.

Generated by scripts/regen_witnesses.py; SOURCES records the search_tight
(seed, budget) that reproduces each entry.
"""

SOURCES = {
    4: (0, 20000),
    5: (0, 20000),
    6: (0, 20000),
    7: (0, 20000),
    8: (0, 20000),
    9: (0, 20000),
    10: (0, 20000),
    11: (0, 20000),
    12: (1, 20000),
}

WITNESSES = {
    4: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (-0.0007796359882432461, 0.1474204396987158, 0.10517915732173512),
        (0.0005262808219081014, 0.46299574502788954, 0.33149549812444684),
    ],
    5: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (0.0005262808219081014, 0.1474204396987158, 0.10499963451942002),
        (0.0018978971260850861, 0.2598612996731732, 0.18629988780355763),
        (0.0013784219140218666, 0.4571019604583215, 0.3278381080715031),
    ],
    6: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (-0.0013137364080035138, 0.19817206637004423, 0.14174050714830502),
        (0.0011587364153858553, 0.29702454712969756, 0.21237701289911454),
        (-0.0011628736893390475, 0.4674057627906269, 0.3351234634422711),
        (0.0014908121108523288, 0.6991240486360429, 0.5037456171801289),
    ],
    7: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (0.0013784219140218666, 0.15361534099872448, 0.11002494102119885),
        (-0.0010242461927442719, 0.19468115286571192, 0.13904785100815445),
        (-0.0018417482285784624, 0.28465438238514645, 0.2040086598994577),
        (-0.0009071401612519229, 0.3814416555816524, 0.2728839923262951),
        (6.01475879764696e-05, 0.4286917135839616, 0.30639087662113257),
    ],
    8: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (0.000882436277864305, 0.15917496149646093, 0.11363441538198232),
        (-2.780972948180694e-05, 0.2214630500096438, 0.1574877692908977),
        (0.00047279237544904586, 0.29516597055914984, 0.21056501335392164),
        (0.000667889763578184, 0.4023213019506435, 0.28775596919470176),
        (0.0013232939769666095, 0.5265999874415713, 0.378071164472124),
        (-0.0001592649118888305, 0.7241702988551758, 0.5212053785687516),
    ],
    9: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (0.000507048031926162, 0.08488319667496745, 0.06051679444553939),
        (-0.0011840539507630998, 0.10865386080842913, 0.0778869763131193),
        (2.6927891385673412e-05, 0.1346611601555897, 0.09555838579739306),
        (0.0010339271146611077, 0.16888994429052398, 0.12064944302516993),
        (0.00030142910378799776, 0.2237262102397154, 0.1592884845761285),
        (0.00043551183834632647, 0.27620972827393, 0.19695159391943937),
        (0.0007560401644378399, 0.36380029969296684, 0.2601425668929087),
    ],
    10: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (0.00014073534850880606, 0.11118862575707122, 0.0789400768667619),
        (-0.0003364495661877653, 0.14119941461388416, 0.1004449364604317),
        (1.3906898225961388e-06, 0.15882500555415496, 0.11277012686366016),
        (-0.0006607729528471372, 0.20546768432774035, 0.14649472238519376),
        (0.0005174044880849284, 0.23267309574999104, 0.1658371221643971),
        (-0.0008736974350740098, 0.26990060832884055, 0.19273706374932692),
        (0.00013287686283336585, 0.3111841951434677, 0.22185943969911026),
        (0.0007421954014205763, 0.37622330879601223, 0.26901966025472185),
    ],
    11: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (-0.00022252500986628043, 0.14395691008525813, 0.1023128631055054),
        (0.0003800392713484026, 0.1721967386928867, 0.12255222917936198),
        (-0.002419442410720454, 0.23606236876198453, 0.16958647270696348),
        (0.00015666945711626662, 0.3063787176281939, 0.21839475725234936),
        (0.00014072924621852563, 0.42285618189362956, 0.3021989205913059),
        (0.0007090412240329212, 0.5004565798644962, 0.35891689153291456),
        (-0.0008869773004207025, 0.6000818307482493, 0.43246016464282244),
        (0.00035030652361968785, 0.7049688022245827, 0.5072133839853318),
        (-0.0009470832798986772, 0.8140546718001863, 0.5875347666029541),
    ],
    12: [
        (-10.0, -10.0, 14.142135623730951),
        (10.0, -10.0, 14.142135623730951),
        (-0.0013086303263241282, 0.0684181216015235, 0.04938943105668474),
        (-4.418785361624671e-05, 0.10678527871053507, 0.07574072536578925),
        (1.9487575873528007e-05, 0.12457884282661105, 0.08837735338265092),
        (0.0005974808900424174, 0.14681530914287524, 0.10463678531712578),
        (-3.0079652892885122e-05, 0.18291245217746738, 0.12995960128406472),
        (0.0003170495368638572, 0.20750040041660076, 0.14781177122428837),
        (-0.0001885862977786144, 0.2509710275746286, 0.17871358398348286),
        (0.0003548890971826238, 0.28098191904602793, 0.2003165463385111),
        (-9.147229895552081e-05, 0.3093129499657873, 0.22050363400274664),
        (-0.00020266715947214487, 0.3977821992673059, 0.2841827869655126),
    ],
}
